//! Permutations on up to 16 points, with cycle-notation I/O.
//!
//! Points are 0-based internally and 1-based in cycle notation.  A
//! permutation stores its full image array padded with fixed points, so
//! equality, hashing and lexicographic order are plain derives; the
//! lexicographic order on image tuples is the canonical element order used
//! throughout the subgroup machinery.

use std::fmt;

use thiserror::Error;

pub const MAX_DEGREE: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("degree {0} exceeds the supported maximum {MAX_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("point {point} outside 1..={degree}")]
    PointOutOfRange { point: u32, degree: u8 },
    #[error("point {0} repeated within a cycle")]
    RepeatedPoint(u32),
    #[error("cycle notation syntax error at byte {at}: {reason}")]
    Syntax { at: usize, reason: &'static str },
}

/// A permutation of `{0, …, degree−1}`; `images[i]` is the image of `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    degree: u8,
    images: [u8; MAX_DEGREE],
}

impl Perm {
    pub fn identity(degree: u8) -> Perm {
        assert!(degree as usize <= MAX_DEGREE);
        let mut images = [0u8; MAX_DEGREE];
        for (i, img) in images.iter_mut().enumerate() {
            *img = i as u8;
        }
        Perm { degree, images }
    }

    /// Build from an explicit image list (0-based); must be a bijection.
    pub fn from_images(degree: u8, images: &[u8]) -> Result<Perm, PermError> {
        if degree as usize > MAX_DEGREE || images.len() != degree as usize {
            return Err(PermError::DegreeTooLarge(images.len()));
        }
        let mut seen = [false; MAX_DEGREE];
        for &img in images {
            if img >= degree {
                return Err(PermError::PointOutOfRange {
                    point: img as u32 + 1,
                    degree,
                });
            }
            if seen[img as usize] {
                return Err(PermError::RepeatedPoint(img as u32 + 1));
            }
            seen[img as usize] = true;
        }
        let mut p = Perm::identity(degree);
        p.images[..images.len()].copy_from_slice(images);
        Ok(p)
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn apply(&self, point: u8) -> u8 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| img == i as u8)
    }

    /// `self` followed by `other`: `x^(self.then(other)) = (x^self)^other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree, other.degree);
        let mut images = [0u8; MAX_DEGREE];
        for (dst, &src) in images.iter_mut().zip(&self.images) {
            *dst = other.images[src as usize];
        }
        Perm { degree: self.degree, images }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = [0u8; MAX_DEGREE];
        for i in 0..MAX_DEGREE {
            images[self.images[i] as usize] = i as u8;
        }
        Perm { degree: self.degree, images }
    }

    /// `other⁻¹ · self · other`.
    pub fn conjugated_by(&self, other: &Perm) -> Perm {
        other.inverse().then(self).then(other)
    }

    pub fn pow(&self, mut k: u32) -> Perm {
        let mut result = Perm::identity(self.degree);
        let mut base = *self;
        while k > 0 {
            if k & 1 == 1 {
                result = result.then(&base);
            }
            base = base.then(&base);
            k >>= 1;
        }
        result
    }

    pub fn order(&self) -> u32 {
        let mut order = 1u32;
        for cycle in self.cycles() {
            order = num_integer::lcm(order, cycle.len() as u32);
        }
        order
    }

    pub fn min_moved_point(&self) -> Option<u8> {
        (0..self.degree).find(|&i| self.images[i as usize] != i)
    }

    pub fn moved_points(&self) -> Vec<u8> {
        (0..self.degree).filter(|&i| self.images[i as usize] != i).collect()
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by
    /// that point (0-based).
    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let mut seen = [false; MAX_DEGREE];
        let mut cycles = Vec::new();
        for start in 0..self.degree {
            if seen[start as usize] || self.images[start as usize] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut point = self.images[start as usize];
            while point != start {
                seen[point as usize] = true;
                cycle.push(point);
                point = self.images[point as usize];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Parse cycle notation like `(1,2)(3,5,4)`; `()` is the identity.
    /// Cycles need not be disjoint: they are composed left to right (the
    /// leftmost cycle acts first).
    pub fn parse(text: &str, degree: u8) -> Result<Perm, PermError> {
        if degree as usize > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(degree as usize));
        }
        let bytes = text.as_bytes();
        let mut at = 0usize;
        let mut result = Perm::identity(degree);
        let skip_ws = |at: &mut usize| {
            while *at < bytes.len() && bytes[*at].is_ascii_whitespace() {
                *at += 1;
            }
        };
        skip_ws(&mut at);
        let mut any = false;
        while at < bytes.len() {
            if bytes[at] != b'(' {
                return Err(PermError::Syntax { at, reason: "expected '('" });
            }
            at += 1;
            skip_ws(&mut at);
            let mut cycle: Vec<u8> = Vec::new();
            while at < bytes.len() && bytes[at] != b')' {
                if !cycle.is_empty() {
                    if bytes[at] != b',' {
                        return Err(PermError::Syntax { at, reason: "expected ',' or ')'" });
                    }
                    at += 1;
                    skip_ws(&mut at);
                }
                let start = at;
                while at < bytes.len() && bytes[at].is_ascii_digit() {
                    at += 1;
                }
                if at == start {
                    return Err(PermError::Syntax { at, reason: "expected a point" });
                }
                let point: u32 = text[start..at]
                    .parse()
                    .map_err(|_| PermError::Syntax { at: start, reason: "point too large" })?;
                if point == 0 || point > degree as u32 {
                    return Err(PermError::PointOutOfRange { point, degree });
                }
                let point = (point - 1) as u8;
                if cycle.contains(&point) {
                    return Err(PermError::RepeatedPoint(point as u32 + 1));
                }
                cycle.push(point);
                skip_ws(&mut at);
            }
            if at == bytes.len() {
                return Err(PermError::Syntax { at, reason: "unclosed cycle" });
            }
            at += 1; // consume ')'
            skip_ws(&mut at);
            any = true;
            if cycle.len() >= 2 {
                let mut c = Perm::identity(degree);
                for w in cycle.windows(2) {
                    c.images[w[0] as usize] = w[1];
                }
                c.images[*cycle.last().unwrap() as usize] = cycle[0];
                result = result.then(&c);
            }
        }
        if !any {
            return Err(PermError::Syntax { at, reason: "empty input" });
        }
        Ok(result)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, point) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", point + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]({self})", self.degree)
    }
}
