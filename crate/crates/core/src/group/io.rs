//! Group file format and name-based group specs.
//!
//! Files are JSON, either `{"degree": n, "generators": [[images…], …]}` with
//! 0-based image lists, or `{"cayley": [[…], …], "labels": […]}`. Specs are
//! compact names: `C6`/`Z6`, `D4` (dihedral of order 8), `S5`, `A5`, `Q8`,
//! `Q16`, `Dic3`, and `x`-separated direct products like `C2xC4`.

use serde::{Deserialize, Serialize};

use super::perm::Perm;
use super::{
    alternating_perm, cyclic, dicyclic, dihedral, direct_product, from_generators, symmetric_perm,
    FiniteGroup, PermGroup,
};
use crate::{Error, Result};

/// On-disk group representation.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupFile {
    Generators {
        degree: usize,
        generators: Vec<Vec<u16>>,
    },
    Cayley {
        cayley: Vec<Vec<usize>>,
        labels: Vec<String>,
    },
}

impl GroupFile {
    pub fn to_group(&self) -> Result<FiniteGroup> {
        match self {
            GroupFile::Generators { degree, generators } => {
                let perms: Vec<Perm> = generators
                    .iter()
                    .map(|imgs| Perm::from_images(imgs.clone()))
                    .collect::<Result<_>>()?;
                Ok(from_generators(*degree, &perms)?.group)
            }
            GroupFile::Cayley { cayley, labels } => {
                FiniteGroup::from_table(cayley.clone(), labels.clone())
            }
        }
    }

    pub fn from_group(group: &FiniteGroup) -> Self {
        GroupFile::Cayley {
            cayley: group.table_rows(),
            labels: group.labels().to_vec(),
        }
    }
}

fn parse_atom(atom: &str) -> Result<FiniteGroup> {
    let atom = atom.trim();
    if atom == "1" {
        return Ok(cyclic(1));
    }
    let (head, tail) = atom.split_at(
        atom.find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| Error::Parse(format!("group spec {atom:?} has no order")))?,
    );
    let n: usize = tail
        .parse()
        .map_err(|_| Error::Parse(format!("bad number in group spec {atom:?}")))?;
    if n == 0 {
        return Err(Error::Parse(format!("group spec {atom:?} has order 0")));
    }
    match head.to_ascii_uppercase().as_str() {
        "C" | "Z" => Ok(cyclic(n)),
        "D" => Ok(dihedral(n)),
        "S" => symmetric_for_spec(n),
        "A" => alternating_for_spec(n),
        "Q" => {
            if n % 4 != 0 || n < 8 {
                Err(Error::Parse(format!(
                    "generalized quaternion Q{n} needs order divisible by 4 and ≥ 8"
                )))
            } else {
                Ok(dicyclic(n / 4))
            }
        }
        "DIC" => Ok(dicyclic(n)),
        _ => Err(Error::Parse(format!("unknown group spec {atom:?}"))),
    }
}

fn symmetric_for_spec(n: usize) -> Result<FiniteGroup> {
    if n > 7 {
        return Err(Error::CapExceeded {
            what: "symmetric group degree in spec",
            cap: 7,
        });
    }
    Ok(symmetric_perm(n)?.group)
}

fn alternating_for_spec(n: usize) -> Result<FiniteGroup> {
    if n > 8 {
        return Err(Error::CapExceeded {
            what: "alternating group degree in spec",
            cap: 8,
        });
    }
    Ok(alternating_perm(n)?.group)
}

/// Parses a spec like `S5`, `C6`, `Q8`, or `C2xC4` into a group.
pub fn parse_group_spec(spec: &str) -> Result<FiniteGroup> {
    let mut parts = spec.split(['x', 'X']);
    let first = parts
        .next()
        .ok_or_else(|| Error::Parse("empty group spec".into()))?;
    let mut group = parse_atom(first)?;
    for part in parts {
        group = direct_product(&group, &parse_atom(part)?)?;
    }
    Ok(group)
}

/// Parses a spec with a natural permutation action (`S<n>`, `A<n>`, `C<n>`,
/// `D<n>`) into a permutation group, for commands that address elements by
/// cycle notation.
pub fn parse_perm_group_spec(spec: &str) -> Result<PermGroup> {
    let spec = spec.trim();
    let (head, tail) = spec.split_at(
        spec.find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| Error::Parse(format!("group spec {spec:?} has no order")))?,
    );
    let n: usize = tail
        .parse()
        .map_err(|_| Error::Parse(format!("bad number in group spec {spec:?}")))?;
    match head.to_ascii_uppercase().as_str() {
        "S" => symmetric_perm(n),
        "A" => alternating_perm(n),
        "C" | "Z" => {
            let cycle: Vec<String> = (1..=n).map(|p| p.to_string()).collect();
            let gen = Perm::parse_cycles(&format!("({})", cycle.join(" ")), n)?;
            from_generators(n, &[gen])
        }
        "D" => {
            if n < 3 {
                return Err(Error::Parse(
                    "dihedral permutation groups need n ≥ 3 points".into(),
                ));
            }
            let cycle: Vec<String> = (1..=n).map(|p| p.to_string()).collect();
            let rot = Perm::parse_cycles(&format!("({})", cycle.join(" ")), n)?;
            let mut images: Vec<u16> = (0..n as u16).collect();
            images.reverse();
            let flip = Perm::from_images(images)?;
            from_generators(n, &[rot, flip])
        }
        _ => Err(Error::Parse(format!(
            "spec {spec:?} has no standard permutation representation"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_parsing() {
        assert_eq!(parse_group_spec("C6").unwrap().order(), 6);
        assert_eq!(parse_group_spec("Z6").unwrap().order(), 6);
        assert_eq!(parse_group_spec("S4").unwrap().order(), 24);
        assert_eq!(parse_group_spec("A5").unwrap().order(), 60);
        assert_eq!(parse_group_spec("D4").unwrap().order(), 8);
        assert_eq!(parse_group_spec("Q8").unwrap().order(), 8);
        assert_eq!(parse_group_spec("Q16").unwrap().order(), 16);
        assert_eq!(parse_group_spec("Dic3").unwrap().order(), 12);
        assert_eq!(parse_group_spec("C2xC4").unwrap().order(), 8);
        assert_eq!(parse_group_spec("C2xC2xC2").unwrap().order(), 8);
        assert!(parse_group_spec("W9").is_err());
        assert!(parse_group_spec("Q6").is_err());
    }

    #[test]
    fn file_roundtrip() {
        let g = parse_group_spec("D4").unwrap();
        let file = GroupFile::from_group(&g);
        let text = serde_json::to_string(&file).unwrap();
        let parsed: GroupFile = serde_json::from_str(&text).unwrap();
        let g2 = parsed.to_group().unwrap();
        assert_eq!(g2.order(), 8);
        assert_eq!(g2.labels(), g.labels());
    }

    #[test]
    fn generator_file_form() {
        let text = r#"{"degree": 3, "generators": [[1,0,2],[1,2,0]]}"#;
        let parsed: GroupFile = serde_json::from_str(text).unwrap();
        assert_eq!(parsed.to_group().unwrap().order(), 6);
    }

    #[test]
    fn perm_spec_groups() {
        assert_eq!(parse_perm_group_spec("S5").unwrap().group.order(), 120);
        assert_eq!(parse_perm_group_spec("C6").unwrap().group.order(), 6);
        assert_eq!(parse_perm_group_spec("D4").unwrap().group.order(), 8);
        assert!(parse_perm_group_spec("Q8").is_err());
    }
}
