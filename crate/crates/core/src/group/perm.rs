//! Permutations on {0, …, n-1} with cycle-notation parsing and display.

use crate::{Error, Result};

/// A permutation stored as its image list: `images[x]` is where `x` goes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    /// Identity on `degree` points.
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from an image list, checking bijectivity.
    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            let img = img as usize;
            if img >= n || seen[img] {
                return Err(Error::Parse(format!(
                    "image list {images:?} is not a permutation of 0..{n}"
                )));
            }
            seen[img] = true;
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// Function composition: `(self ∘ other)(x) = self(other(x))`,
    /// i.e. `other` acts first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y as usize] = x as u16;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x as u16 == y)
    }

    /// Parity: true for even permutations.
    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.degree()];
        let mut transpositions = 0usize;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Cycle notation with 1-based points, e.g. `(1 2 3)(4 5)`; identity is `e`.
    pub fn cycle_string(&self) -> String {
        let mut seen = vec![false; self.degree()];
        let mut out = String::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.apply(x);
            }
            out.push('(');
            out.push_str(
                &cycle
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push('e');
        }
        out
    }

    /// Parses cycle notation with 1-based points. Cycles are parenthesized;
    /// points inside a cycle are separated by whitespace or commas:
    /// `(1 2 3)(4 5)`, `(1,2)`. The bare string `e` or `()` is the identity.
    /// `degree` gives the number of points; points beyond it are rejected.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Perm> {
        let s = s.trim();
        if s == "e" || s == "()" || s.is_empty() {
            return Ok(Perm::identity(degree));
        }
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut moved = vec![false; degree];
        let mut rest = s;
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            if !rest.starts_with('(') {
                return Err(Error::Parse(format!("expected '(' in cycle string {s:?}")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            let body = &rest[1..close];
            rest = &rest[close + 1..];
            let points: Vec<usize> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {t:?} in cycle string {s:?}")))
                })
                .collect::<Result<_>>()?;
            if points.is_empty() {
                continue;
            }
            for &p in &points {
                if p == 0 || p > degree {
                    return Err(Error::Parse(format!(
                        "point {p} out of range 1..={degree} in {s:?}"
                    )));
                }
                if moved[p - 1] {
                    return Err(Error::Parse(format!("point {p} repeated in {s:?}")));
                }
                moved[p - 1] = true;
            }
            for w in 0..points.len() {
                let from = points[w] - 1;
                let to = points[(w + 1) % points.len()] - 1;
                images[from] = to as u16;
            }
        }
        Perm::from_images(images)
    }

    /// Parses a comma/whitespace-separated list of cycles as a generator list,
    /// e.g. `(1 2),(1 2 3 4)`. Each top-level `(...)` group is one generator
    /// only when separated by commas outside parentheses; adjacent cycle
    /// groups without a separator multiply into a single permutation.
    pub fn parse_generator_list(s: &str, degree: usize) -> Result<Vec<Perm>> {
        let mut gens = Vec::new();
        let mut depth = 0usize;
        let mut current = String::new();
        for c in s.chars() {
            match c {
                '(' => {
                    depth += 1;
                    current.push(c);
                }
                ')' => {
                    depth = depth
                        .checked_sub(1)
                        .ok_or_else(|| Error::Parse(format!("unbalanced ')' in {s:?}")))?;
                    current.push(c);
                }
                ',' if depth == 0 => {
                    if !current.trim().is_empty() {
                        gens.push(Perm::parse_cycles(&current, degree)?);
                    }
                    current.clear();
                }
                _ => current.push(c),
            }
        }
        if depth != 0 {
            return Err(Error::Parse(format!("unbalanced '(' in {s:?}")));
        }
        if !current.trim().is_empty() {
            gens.push(Perm::parse_cycles(&current, degree)?);
        }
        if gens.is_empty() {
            return Err(Error::Parse(format!("no generators in {s:?}")));
        }
        Ok(gens)
    }

    /// Largest 1-based point mentioned in a cycle string, for inferring degree.
    pub fn max_point(s: &str) -> usize {
        s.split(|c: char| !c.is_ascii_digit())
            .filter(|t| !t.is_empty())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Perm::parse_cycles("(1 2)", 3).unwrap();
        let b = Perm::parse_cycles("(2 3)", 3).unwrap();
        // (a ∘ b)(3) = a(b(3)) = a(2) = 1
        let ab = a.compose(&b);
        assert_eq!(ab.apply(2), 0);
        assert_eq!(ab.cycle_string(), "(1 2 3)");
    }

    #[test]
    fn cycle_roundtrip() {
        let p = Perm::parse_cycles("(1 2 3)(4 5)", 6).unwrap();
        assert_eq!(p.cycle_string(), "(1 2 3)(4 5)");
        assert_eq!(Perm::parse_cycles("e", 4).unwrap(), Perm::identity(4));
    }

    #[test]
    fn generator_list_splits_on_top_level_commas() {
        let gens = Perm::parse_generator_list("(1 2),(1 2 3 4)", 4).unwrap();
        assert_eq!(gens.len(), 2);
        let product = Perm::parse_generator_list("(1 2)(3 4)", 4).unwrap();
        assert_eq!(product.len(), 1);
    }

    #[test]
    fn parity() {
        assert!(Perm::parse_cycles("(1 2 3)", 3).unwrap().is_even());
        assert!(!Perm::parse_cycles("(1 2)", 3).unwrap().is_even());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Perm::parse_cycles("(1 2", 3).is_err());
        assert!(Perm::parse_cycles("(1 7)", 3).is_err());
        assert!(Perm::parse_cycles("(1 2)(2 3)", 3).is_err());
    }
}
