//! Text grammar for group constructions.
//!
//! ```text
//! spec   := "Z:" n                      cyclic group of order n
//!         | "D:" n                      dihedral group of order 2n
//!         | "SD:" m "," k "," i         Z_m ⋊ Z_k with action a -> a^i
//!         | "X(" spec "," spec ")"      direct product
//!         | "PERM:" degree ":" gens     permutation group generated by gens
//!         | NAME [":" n ("," n)*]       named group or family (see NAMED_TAGS)
//! gens   := gen ("," gen)*
//! gen    := cycle ("x" cycle)*          product of cycles
//! cycle  := "[" n (" " n)* "]"          0-based points, e.g. [0 1 2]
//! ```
//!
//! Examples: `Z:36`, `D:6`, `SD:7,3,2`, `X(Z:3,A4)`, `PERM:4:[0 1 2],[0 1]x[2 3]`,
//! `G5:7,3,1`. Whitespace outside cycles is ignored.

use std::fmt;
use std::str::FromStr;

use super::{cyclic, dihedral, direct_product, named, permutation_group, semidirect_cyclic, FiniteGroup, Permutation};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    SemidirectCyclic { m: usize, k: usize, i: usize },
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    /// Generators as lists of cycles.
    Permutation { degree: usize, gens: Vec<Vec<Vec<u32>>> },
    Named { tag: String, args: Vec<u64> },
}

impl GroupSpec {
    /// Order of the group this spec describes, when it is known without
    /// running a permutation closure.
    pub fn nominal_order(&self) -> Result<Option<u64>> {
        Ok(match self {
            GroupSpec::Cyclic(n) => Some(*n as u64),
            GroupSpec::Dihedral(n) => Some(2 * *n as u64),
            GroupSpec::SemidirectCyclic { m, k, .. } => Some((*m * *k) as u64),
            GroupSpec::DirectProduct(a, b) => match (a.nominal_order()?, b.nominal_order()?) {
                (Some(x), Some(y)) => Some(x * y),
                _ => None,
            },
            GroupSpec::Permutation { .. } => None,
            GroupSpec::Named { tag, args } => Some(named::nominal_order(tag, args)?),
        })
    }

    /// Constructs the group, refusing anything with more than `max_order` elements.
    pub fn build(&self, max_order: usize) -> Result<FiniteGroup> {
        if let Some(order) = self.nominal_order()? {
            if order > max_order as u64 {
                return Err(Error::CapExceeded { what: "group order", size: order as usize, cap: max_order });
            }
        }
        let group = match self {
            GroupSpec::Cyclic(n) => cyclic(*n)?,
            GroupSpec::Dihedral(n) => dihedral(*n)?,
            GroupSpec::SemidirectCyclic { m, k, i } => semidirect_cyclic(*m, *k, *i)?,
            GroupSpec::DirectProduct(a, b) => direct_product(&a.build(max_order)?, &b.build(max_order)?)?,
            GroupSpec::Permutation { degree, gens } => {
                let perms = gens
                    .iter()
                    .map(|cycles| Permutation::from_cycles(*degree, cycles))
                    .collect::<Result<Vec<_>>>()?;
                permutation_group(*degree, &perms, max_order)?
            }
            GroupSpec::Named { tag, args } => named::named(tag, args)?,
        };
        Ok(group.with_name(self.to_string()))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D:{n}"),
            GroupSpec::SemidirectCyclic { m, k, i } => write!(f, "SD:{m},{k},{i}"),
            GroupSpec::DirectProduct(a, b) => write!(f, "X({a},{b})"),
            GroupSpec::Permutation { degree, gens } => {
                write!(f, "PERM:{degree}:")?;
                for (gi, cycles) in gens.iter().enumerate() {
                    if gi > 0 {
                        write!(f, ",")?;
                    }
                    if cycles.is_empty() {
                        write!(f, "[]")?;
                    }
                    for (ci, cycle) in cycles.iter().enumerate() {
                        if ci > 0 {
                            write!(f, "x")?;
                        }
                        let body: Vec<String> = cycle.iter().map(|x| x.to_string()).collect();
                        write!(f, "[{}]", body.join(" "))?;
                    }
                }
                Ok(())
            }
            GroupSpec::Named { tag, args } => {
                write!(f, "{tag}")?;
                if !args.is_empty() {
                    let body: Vec<String> = args.iter().map(|x| x.to_string()).collect();
                    write!(f, ":{}", body.join(","))?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = Parser { src: s.as_bytes(), pos: 0 };
        let spec = parser.spec()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        let text = String::from_utf8_lossy(self.src);
        Error::Parse(format!("{msg} at position {} in {text:?}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("number out of range"))
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a group name"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    /// A comma followed by a digit continues a numeric argument list; a comma
    /// followed by anything else belongs to an enclosing `X(..)`.
    fn comma_then(&mut self, pred: impl Fn(u8) -> bool) -> bool {
        if self.peek() != Some(b',') {
            return false;
        }
        let save = self.pos;
        self.pos += 1;
        match self.peek() {
            Some(c) if pred(c) => true,
            _ => {
                self.pos = save;
                false
            }
        }
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let name = self.ident()?;
        match name.as_str() {
            "X" => {
                self.expect(b'(')?;
                let a = self.spec()?;
                self.expect(b',')?;
                let b = self.spec()?;
                self.expect(b')')?;
                Ok(GroupSpec::DirectProduct(Box::new(a), Box::new(b)))
            }
            "Z" | "D" => {
                self.expect(b':')?;
                let n = self.number()? as usize;
                Ok(if name == "Z" { GroupSpec::Cyclic(n) } else { GroupSpec::Dihedral(n) })
            }
            "SD" => {
                self.expect(b':')?;
                let m = self.number()? as usize;
                self.expect(b',')?;
                let k = self.number()? as usize;
                self.expect(b',')?;
                let i = self.number()? as usize;
                Ok(GroupSpec::SemidirectCyclic { m, k, i })
            }
            "PERM" => {
                self.expect(b':')?;
                let degree = self.number()? as usize;
                self.expect(b':')?;
                let mut gens = vec![self.generator()?];
                while self.comma_then(|c| c == b'[') {
                    gens.push(self.generator()?);
                }
                Ok(GroupSpec::Permutation { degree, gens })
            }
            _ => {
                if !named::is_known_tag(&name) {
                    return Err(Error::Parse(format!("unknown group name {name:?}")));
                }
                let mut args = Vec::new();
                if self.peek() == Some(b':') {
                    self.pos += 1;
                    args.push(self.number()?);
                    while self.comma_then(|c| c.is_ascii_digit()) {
                        args.push(self.number()?);
                    }
                }
                Ok(GroupSpec::Named { tag: name, args })
            }
        }
    }

    fn generator(&mut self) -> Result<Vec<Vec<u32>>> {
        let mut cycles = Vec::new();
        loop {
            self.expect(b'[')?;
            let mut cycle = Vec::new();
            while self.peek() != Some(b']') {
                cycle.push(self.number()? as u32);
            }
            self.pos += 1;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            if self.peek() == Some(b'x') {
                self.pos += 1;
            } else {
                return Ok(cycles);
            }
        }
    }
}
