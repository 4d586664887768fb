//! Ring file format.
//!
//! JSON object with keys `rank`, `labels`, `unit`, `dual` (image list of the
//! involution), and `N`: an array of `[i, j, k, n]` quadruples with `n ≥ 1`;
//! omitted triples are zero. Parsing rejects out-of-range indices, duplicate
//! triples, explicit zeros, and a non-involutive `dual`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::FusionRing;
use crate::Result;

/// On-disk fusion ring representation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingFile {
    pub rank: usize,
    pub labels: Vec<String>,
    pub unit: usize,
    pub dual: Vec<usize>,
    #[serde(rename = "N")]
    pub coefficients: Vec<(usize, usize, usize, u64)>,
}

impl RingFile {
    pub fn to_ring(&self) -> Result<FusionRing> {
        FusionRing::new(
            self.rank,
            self.labels.clone(),
            self.unit,
            self.dual.clone(),
            self.coefficients.iter().copied(),
        )
    }

    pub fn from_ring(ring: &FusionRing) -> Self {
        RingFile {
            rank: ring.rank(),
            labels: ring.labels().to_vec(),
            unit: ring.unit(),
            dual: ring.dual_map().to_vec(),
            coefficients: ring.coefficients().collect(),
        }
    }
}

/// Reads a ring file from disk.
pub fn read_ring(path: impl AsRef<Path>) -> Result<FusionRing> {
    let text = std::fs::read_to_string(path)?;
    let file: RingFile = serde_json::from_str(&text)?;
    file.to_ring()
}

/// Writes a ring file to disk.
pub fn write_ring(path: impl AsRef<Path>, ring: &FusionRing) -> Result<()> {
    let file = RingFile::from_ring(ring);
    std::fs::write(path, serde_json::to_string_pretty(&file)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let ring = FusionRing::new(
            2,
            vec!["e".into(), "g".into()],
            0,
            vec![0, 1],
            vec![(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1)],
        )
        .unwrap();
        let text = serde_json::to_string(&RingFile::from_ring(&ring)).unwrap();
        let parsed: RingFile = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.to_ring().unwrap(), ring);
    }

    #[test]
    fn rejects_out_of_range_and_duplicates() {
        let bad: RingFile = serde_json::from_str(
            r#"{"rank":2,"labels":["e","g"],"unit":0,"dual":[0,1],"N":[[0,0,5,1]]}"#,
        )
        .unwrap();
        assert!(bad.to_ring().is_err());
        let dup: RingFile = serde_json::from_str(
            r#"{"rank":1,"labels":["e"],"unit":0,"dual":[0],"N":[[0,0,0,1],[0,0,0,1]]}"#,
        )
        .unwrap();
        assert!(dup.to_ring().is_err());
        let noninv: RingFile = serde_json::from_str(
            r#"{"rank":3,"labels":["a","b","c"],"unit":0,"dual":[0,2,0],"N":[]}"#,
        )
        .unwrap();
        assert!(noninv.to_ring().is_err());
    }
}
