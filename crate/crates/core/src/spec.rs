//! A small expression language naming how a group is built.
//!
//! ```text
//! spec    := factor ("x" factor)*
//! factor  := "C" n | "D" n | "Dic" n | "Q" n | "SD" n
//!          | "A" n ("x" n)*
//!          | "M(" m "," n "," r ")"
//!          | "E(" p "," k "," matrix "," m ")"
//!          | "P(" degree ";" perm ("," perm)* ")"
//! matrix  := "[" row (";" row)* "]"      row  := n ("," n)*
//! perm    := "()" | ("(" n (" " n)* ")")+
//! ```
//!
//! Inside `A`, an `x` followed by a digit continues the list of parts; an `x`
//! followed by a letter starts the next factor.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::construct::{
    abelian, cyclic, dicyclic, dihedral, direct_product, elementary_semidirect, from_permutations,
    generalized_quaternion, metacyclic, semidihedral, Matrix, Permutation,
};
use crate::error::{GroupError, ParseError};
use crate::group::FiniteGroup;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Quaternion(usize),
    Semidihedral(usize),
    Abelian(Vec<usize>),
    Metacyclic { m: usize, n: usize, r: usize },
    Elementary { p: u64, k: usize, matrix: Vec<Vec<u64>>, m: usize },
    /// Generators as lists of 1-based cycles; an empty list is the identity.
    Permutations { degree: usize, generators: Vec<Vec<Vec<usize>>> },
    Product(Vec<GroupSpec>),
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut parser = Parser { text: text.as_bytes(), pos: 0 };
        let spec = parser.spec()?;
        if parser.pos != text.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        let group = match self {
            Self::Cyclic(n) => cyclic(*n)?,
            Self::Dihedral(n) => dihedral(*n)?,
            Self::Dicyclic(n) => dicyclic(*n)?,
            Self::Quaternion(n) => generalized_quaternion(*n)?,
            Self::Semidihedral(n) => semidihedral(*n)?,
            Self::Abelian(parts) => abelian(parts)?,
            Self::Metacyclic { m, n, r } => metacyclic(*m, *n, *r)?,
            Self::Elementary { p, k, matrix, m } => {
                let matrix = Matrix::new(matrix.clone())?;
                if matrix.dim() != *k {
                    return Err(GroupError::InvalidParameters(format!(
                        "rank {k} does not match the {0}×{0} matrix",
                        matrix.dim()
                    )));
                }
                elementary_semidirect(*p, &matrix, *m)?
            }
            Self::Permutations { degree, generators } => {
                let perms = generators
                    .iter()
                    .map(|cycles| Permutation::from_cycles(*degree, cycles))
                    .collect::<Result<Vec<_>, _>>()?;
                from_permutations(*degree, &perms)?
            }
            Self::Product(factors) => {
                let (first, rest) = factors
                    .split_first()
                    .ok_or_else(|| GroupError::InvalidParameters("empty product".into()))?;
                let mut acc = first.build()?;
                for f in rest {
                    acc = direct_product(&acc, &f.build()?)?;
                }
                acc
            }
        };
        Ok(group.with_spec(self.to_string()))
    }

    /// `self × other`, flattening nested products.
    pub fn times(&self, other: &Self) -> Self {
        let mut factors = Vec::new();
        for s in [self, other] {
            match s {
                Self::Product(fs) => factors.extend(fs.iter().cloned()),
                s => factors.push(s.clone()),
            }
        }
        Self::Product(factors)
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cyclic(n) => write!(f, "C{n}"),
            Self::Dihedral(n) => write!(f, "D{n}"),
            Self::Dicyclic(n) => write!(f, "Dic{n}"),
            Self::Quaternion(n) => write!(f, "Q{n}"),
            Self::Semidihedral(n) => write!(f, "SD{n}"),
            Self::Abelian(parts) => write!(f, "A{}", join(parts, "x")),
            Self::Metacyclic { m, n, r } => write!(f, "M({m},{n},{r})"),
            Self::Elementary { p, k, matrix, m } => {
                let rows: Vec<String> = matrix.iter().map(|r| join(r, ",")).collect();
                write!(f, "E({p},{k},[{}],{m})", rows.join(";"))
            }
            Self::Permutations { degree, generators } => {
                let gens: Vec<String> = generators
                    .iter()
                    .map(|cycles| {
                        if cycles.is_empty() {
                            "()".to_string()
                        } else {
                            cycles.iter().map(|c| format!("({})", join(c, " "))).collect()
                        }
                    })
                    .collect();
                write!(f, "P({degree};{})", gens.join(","))
            }
            Self::Product(factors) => write!(f, "{}", join(factors, "x")),
        }
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for GroupSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<u8> {
        self.text.get(self.pos + offset).copied()
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.text[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{token}'")))
        }
    }

    fn skip_spaces(&mut self) {
        while self.peek() == Some(b' ') {
            self.pos += 1;
        }
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| ParseError {
                pos: start,
                message: "number too large".into(),
            })
    }

    /// A number inside parentheses, surrounded by optional spaces.
    fn argument(&mut self) -> Result<usize, ParseError> {
        self.skip_spaces();
        let n = self.number()?;
        self.skip_spaces();
        Ok(n)
    }

    fn spec(&mut self) -> Result<GroupSpec, ParseError> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(b'x') {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            GroupSpec::Product(factors)
        })
    }

    fn factor(&mut self) -> Result<GroupSpec, ParseError> {
        if self.eat("Dic") {
            Ok(GroupSpec::Dicyclic(self.number()?))
        } else if self.eat("SD") {
            Ok(GroupSpec::Semidihedral(self.number()?))
        } else if self.eat("C") {
            Ok(GroupSpec::Cyclic(self.number()?))
        } else if self.eat("D") {
            Ok(GroupSpec::Dihedral(self.number()?))
        } else if self.eat("Q") {
            Ok(GroupSpec::Quaternion(self.number()?))
        } else if self.eat("A") {
            let mut parts = vec![self.number()?];
            while self.peek() == Some(b'x') && self.peek_at(1).is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
                parts.push(self.number()?);
            }
            Ok(GroupSpec::Abelian(parts))
        } else if self.eat("M(") {
            let m = self.argument()?;
            self.expect(",")?;
            let n = self.argument()?;
            self.expect(",")?;
            let r = self.argument()?;
            self.expect(")")?;
            Ok(GroupSpec::Metacyclic { m, n, r })
        } else if self.eat("E(") {
            let p = self.argument()? as u64;
            self.expect(",")?;
            let k = self.argument()?;
            self.expect(",")?;
            self.skip_spaces();
            let matrix = self.matrix()?;
            self.skip_spaces();
            self.expect(",")?;
            let m = self.argument()?;
            self.expect(")")?;
            Ok(GroupSpec::Elementary { p, k, matrix, m })
        } else if self.eat("P(") {
            let degree = self.argument()?;
            self.expect(";")?;
            let mut generators = vec![self.permutation()?];
            while self.eat(",") {
                generators.push(self.permutation()?);
            }
            self.skip_spaces();
            self.expect(")")?;
            Ok(GroupSpec::Permutations { degree, generators })
        } else {
            Err(self.error("expected one of C, D, Dic, Q, SD, A, M(, E(, P("))
        }
    }

    fn matrix(&mut self) -> Result<Vec<Vec<u64>>, ParseError> {
        self.expect("[")?;
        let mut rows = Vec::new();
        loop {
            let mut row = vec![self.argument()? as u64];
            while self.eat(",") {
                row.push(self.argument()? as u64);
            }
            rows.push(row);
            if !self.eat(";") {
                break;
            }
        }
        self.expect("]")?;
        Ok(rows)
    }

    fn permutation(&mut self) -> Result<Vec<Vec<usize>>, ParseError> {
        self.skip_spaces();
        if self.eat("()") {
            return Ok(Vec::new());
        }
        let mut cycles = Vec::new();
        while self.eat("(") {
            let mut cycle = vec![self.argument()?];
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                cycle.push(self.argument()?);
            }
            self.expect(")")?;
            cycles.push(cycle);
        }
        if cycles.is_empty() {
            return Err(self.error("expected a permutation in cycle notation"));
        }
        self.skip_spaces();
        Ok(cycles)
    }
}
