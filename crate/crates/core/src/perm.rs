use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `{0, .., degree - 1}`.
///
/// Products compose left to right: `a.compose(&b)` applies `a` first, then `b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, rejecting non-bijections.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen
                .get_mut(i as usize)
                .ok_or_else(|| Error::InvalidPermutation(format!("point {i} out of range")))?;
            if *slot {
                return Err(Error::InvalidPermutation(format!("point {i} hit twice")));
            }
            *slot = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                let idx = pt as usize;
                if idx >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {pt} exceeds degree {degree}"
                    )));
                }
                if touched[idx] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {pt} appears in more than one cycle"
                    )));
                }
                touched[idx] = true;
                images[idx] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    /// Parses disjoint-cycle notation such as `(0 1 2)(3 4)`.
    ///
    /// The degree is the larger of `min_degree` and one past the largest point.
    /// On failure returns the byte offset of the problem along with a message.
    pub fn parse_cycles(text: &str, min_degree: usize) -> Result<Self, (usize, String)> {
        let cycles = parse_cycle_list(text)?;
        let top = cycles
            .iter()
            .flatten()
            .map(|&p| p as usize + 1)
            .max()
            .unwrap_or(1);
        Permutation::from_cycles(top.max(min_degree).max(1), &cycles)
            .map_err(|e| (0, e.to_string()))
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Extends the permutation to a larger degree by fixing the new points,
    /// after shifting every point by `offset`.
    pub fn shifted(&self, offset: usize, degree: usize) -> Permutation {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &j) in self.images.iter().enumerate() {
            images[i + offset] = j + offset as u32;
        }
        Permutation { images }
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut pt = start;
            while !seen[pt] {
                seen[pt] = true;
                cycle.push(pt as u32);
                pt = self.images[pt] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}; {}]", self.degree(), self)
    }
}

fn parse_cycle_list(text: &str) -> Result<Vec<Vec<u32>>, (usize, String)> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut cycles = Vec::new();
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    loop {
        skip_ws(&mut pos);
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b'(' {
            return Err((
                pos,
                format!("expected '(' but found {:?}", bytes[pos] as char),
            ));
        }
        let open = pos;
        pos += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut pos);
            if pos == bytes.len() {
                return Err((open, "unterminated cycle".into()));
            }
            match bytes[pos] {
                b')' => {
                    pos += 1;
                    break;
                }
                b',' => pos += 1,
                b'0'..=b'9' => {
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let value: u32 = text[start..pos]
                        .parse()
                        .map_err(|_| (start, "point index overflows".to_string()))?;
                    if cycle.contains(&value) {
                        return Err((start, format!("point {value} repeated within a cycle")));
                    }
                    cycle.push(value);
                }
                other => return Err((pos, format!("unexpected character {:?}", other as char))),
            }
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_round_trip() {
        let p = Permutation::parse_cycles("(0 1 2)(3 4)", 0).unwrap();
        assert_eq!(p.degree(), 5);
        assert_eq!(p.images(), &[1, 2, 0, 4, 3]);
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
    }

    #[test]
    fn compose_applies_left_first() {
        let a = Permutation::parse_cycles("(0 1)", 3).unwrap();
        let b = Permutation::parse_cycles("(1 2)", 3).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.compose(&b).apply(0), 2);
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn malformed_cycles_are_rejected() {
        assert!(Permutation::parse_cycles("(0 1", 0).is_err());
        assert!(Permutation::parse_cycles("(0 1 0)", 0).is_err());
        assert!(Permutation::parse_cycles("(0 1)(1 2)", 0).is_err());
        assert!(Permutation::parse_cycles("0 1)", 0).is_err());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn empty_text_is_identity() {
        let p = Permutation::parse_cycles("", 3).unwrap();
        assert!(p.is_identity());
        assert_eq!(p.degree(), 3);
    }
}
