use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::perm::Permutation;

/// Textual description of a group.
///
/// Grammar: a kind keyword followed by whitespace-separated parameters.
///
/// ```text
/// cyclic 12
/// dihedral 6                      order 12
/// generalized_quaternion 4        order 16 (alias: quaternion)
/// symmetric 4 | alternating 5
/// elementary_abelian 2 3
/// sl2 5 | psl2 9 | psl2 3^2
/// named 36 3
/// explicit (0 1 2 3 4), (0 1 2)
/// direct_product [alternating 5] [cyclic 7]
/// semidirect_product [elementary_abelian 2 2] [cyclic 9] act 2 3
/// ```
///
/// For `semidirect_product`, `act` is followed by one group of indices per
/// generator of the acting group, separated by `|`; each group lists the
/// element indices of the images of the normal factor's generators. Without
/// `act` the action is trivial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Dihedral group of order `2n`.
    Dihedral(usize),
    /// Generalized quaternion group of order `2^k`.
    GeneralizedQuaternion(u32),
    Symmetric(usize),
    Alternating(usize),
    ElementaryAbelian {
        p: u64,
        n: u32,
    },
    DirectProduct(Vec<GroupSpec>),
    SemidirectProduct {
        normal: Box<GroupSpec>,
        acting: Box<GroupSpec>,
        action: Vec<Vec<usize>>,
    },
    Sl2(u64),
    Psl2(u64),
    Named {
        order: usize,
        id: usize,
    },
    Explicit(Vec<Permutation>),
}

/// A grammar violation at a byte offset of the spec text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for SpecParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (at offset {})", self.message, self.offset)
    }
}

impl std::error::Error for SpecParseError {}

impl GroupSpec {
    /// Parses a spec, reporting errors as line 1 with a 1-based column.
    pub fn parse(text: &str) -> Result<GroupSpec, Error> {
        text.parse().map_err(|e: SpecParseError| Error::Parse {
            line: 1,
            column: e.offset + 1,
            message: e.message,
        })
    }
}

impl FromStr for GroupSpec {
    type Err = SpecParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser { text, pos: 0 };
        let spec = parser.spec()?;
        parser.skip_ws();
        if parser.pos != text.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> SpecParseError {
        SpecParseError {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn word(&mut self) -> Result<&'a str, SpecParseError> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected a keyword"));
        }
        let w = &self.rest()[..len];
        self.pos += len;
        Ok(w)
    }

    fn integer(&mut self) -> Result<u64, SpecParseError> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected an integer"));
        }
        let value = self.rest()[..len]
            .parse()
            .map_err(|_| self.error("integer out of range"))?;
        self.pos += len;
        Ok(value)
    }

    /// `q` or `p^m`.
    fn prime_power(&mut self) -> Result<u64, SpecParseError> {
        let start = self.pos;
        let base = self.integer()?;
        if self.rest().starts_with('^') {
            self.pos += 1;
            let exp = self.integer()?;
            return u32::try_from(exp)
                .ok()
                .and_then(|e| base.checked_pow(e))
                .ok_or(SpecParseError {
                    offset: start,
                    message: "prime power overflows".into(),
                });
        }
        Ok(base)
    }

    fn expect(&mut self, c: char) -> Result<(), SpecParseError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn bracketed(&mut self) -> Result<GroupSpec, SpecParseError> {
        self.expect('[')?;
        let inner = self.spec()?;
        self.expect(']')?;
        Ok(inner)
    }

    fn spec(&mut self) -> Result<GroupSpec, SpecParseError> {
        let kw_pos = {
            self.skip_ws();
            self.pos
        };
        let kind = self.word()?;
        let usize_param = |p: &mut Self| p.integer().map(|v| v as usize);
        Ok(match kind {
            "cyclic" => GroupSpec::Cyclic(usize_param(self)?),
            "dihedral" => GroupSpec::Dihedral(usize_param(self)?),
            "generalized_quaternion" | "quaternion" => {
                GroupSpec::GeneralizedQuaternion(self.integer()? as u32)
            }
            "symmetric" => GroupSpec::Symmetric(usize_param(self)?),
            "alternating" => GroupSpec::Alternating(usize_param(self)?),
            "elementary_abelian" => {
                let p = self.integer()?;
                let n = self.integer()? as u32;
                GroupSpec::ElementaryAbelian { p, n }
            }
            "sl2" => GroupSpec::Sl2(self.prime_power()?),
            "psl2" => GroupSpec::Psl2(self.prime_power()?),
            "named" => {
                let order = usize_param(self)?;
                let id = usize_param(self)?;
                GroupSpec::Named { order, id }
            }
            "direct_product" => {
                let mut factors = vec![self.bracketed()?];
                while self.peek() == Some('[') {
                    factors.push(self.bracketed()?);
                }
                GroupSpec::DirectProduct(factors)
            }
            "semidirect_product" => {
                let normal = Box::new(self.bracketed()?);
                let acting = Box::new(self.bracketed()?);
                let mut action = Vec::new();
                self.skip_ws();
                if self.rest().starts_with("act") {
                    self.word()?;
                    let mut current = Vec::new();
                    loop {
                        match self.peek() {
                            Some('|') => {
                                self.pos += 1;
                                action.push(std::mem::take(&mut current));
                            }
                            Some(c) if c.is_ascii_digit() => current.push(self.integer()? as usize),
                            _ => break,
                        }
                    }
                    action.push(current);
                }
                GroupSpec::SemidirectProduct {
                    normal,
                    acting,
                    action,
                }
            }
            "explicit" => {
                let mut gens = Vec::new();
                while self.peek() == Some('(') {
                    let start = self.pos;
                    let len = self.rest().find([',', ']']).unwrap_or(self.rest().len());
                    let chunk = &self.rest()[..len];
                    let perm = Permutation::parse_cycles(chunk, 1).map_err(|(off, message)| {
                        SpecParseError {
                            offset: start + off,
                            message,
                        }
                    })?;
                    gens.push(perm);
                    self.pos += len;
                    if self.peek() == Some(',') {
                        self.pos += 1;
                    }
                }
                GroupSpec::Explicit(gens)
            }
            other => {
                return Err(SpecParseError {
                    offset: kw_pos,
                    message: format!("unknown group kind {other:?}"),
                })
            }
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic {n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral {n}"),
            GroupSpec::GeneralizedQuaternion(k) => write!(f, "generalized_quaternion {k}"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric {n}"),
            GroupSpec::Alternating(n) => write!(f, "alternating {n}"),
            GroupSpec::ElementaryAbelian { p, n } => write!(f, "elementary_abelian {p} {n}"),
            GroupSpec::DirectProduct(fs) => {
                f.write_str("direct_product")?;
                for s in fs {
                    write!(f, " [{s}]")?;
                }
                Ok(())
            }
            GroupSpec::SemidirectProduct {
                normal,
                acting,
                action,
            } => {
                write!(f, "semidirect_product [{normal}] [{acting}]")?;
                if !action.is_empty() {
                    f.write_str(" act")?;
                    for (i, images) in action.iter().enumerate() {
                        if i > 0 {
                            f.write_str(" |")?;
                        }
                        for x in images {
                            write!(f, " {x}")?;
                        }
                    }
                }
                Ok(())
            }
            GroupSpec::Sl2(q) => write!(f, "sl2 {q}"),
            GroupSpec::Psl2(q) => write!(f, "psl2 {q}"),
            GroupSpec::Named { order, id } => write!(f, "named {order} {id}"),
            GroupSpec::Explicit(gens) => {
                f.write_str("explicit")?;
                for (i, g) in gens.iter().enumerate() {
                    f.write_str(if i == 0 { " " } else { ", " })?;
                    write!(f, "{g}")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_simple_kinds() {
        assert_eq!("alternating 5".parse(), Ok(GroupSpec::Alternating(5)));
        assert_eq!(
            " elementary_abelian 2 3 ".parse(),
            Ok(GroupSpec::ElementaryAbelian { p: 2, n: 3 })
        );
        assert_eq!("psl2 3^2".parse(), Ok(GroupSpec::Psl2(9)));
        assert_eq!(
            "quaternion 3".parse(),
            Ok(GroupSpec::GeneralizedQuaternion(3))
        );
    }

    #[test]
    fn parses_nested_products() {
        let spec: GroupSpec = "direct_product [alternating 5] [cyclic 7]".parse().unwrap();
        assert_eq!(
            spec,
            GroupSpec::DirectProduct(vec![GroupSpec::Alternating(5), GroupSpec::Cyclic(7)])
        );
        let spec: GroupSpec = "semidirect_product [elementary_abelian 2 2] [cyclic 9] act 2 3"
            .parse()
            .unwrap();
        match &spec {
            GroupSpec::SemidirectProduct { action, .. } => assert_eq!(action, &vec![vec![2, 3]]),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(spec.to_string().parse::<GroupSpec>().unwrap(), spec);
    }

    #[test]
    fn parses_explicit_generators() {
        let spec: GroupSpec = "explicit (0 1 2 3 4), (0 1 2)".parse().unwrap();
        match &spec {
            GroupSpec::Explicit(g) => {
                assert_eq!(g.len(), 2);
                assert_eq!(g[1].to_string(), "(0 1 2)");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!("explicit".parse(), Ok(GroupSpec::Explicit(vec![])));
    }

    #[test]
    fn reports_offsets() {
        let err = "explicit (0 1".parse::<GroupSpec>().unwrap_err();
        assert_eq!(err.offset, 9);
        let err = "frobenius 20".parse::<GroupSpec>().unwrap_err();
        assert_eq!(err.offset, 0);
        assert!("cyclic".parse::<GroupSpec>().is_err());
        assert!("cyclic 5 extra".parse::<GroupSpec>().is_err());
        assert!("direct_product [cyclic 2".parse::<GroupSpec>().is_err());
        assert!(matches!(
            GroupSpec::parse("cyclic x"),
            Err(Error::Parse { column: 8, .. })
        ));
    }
}
