//! The Tait correspondence between 4-colorings of a cycle and
//! precolorings.
//!
//! Vertex colors `1, 2, 3, 4` are read as the Klein group elements
//! `00, 01, 10, 11`; an edge gets the XOR of its ends, read back as
//! `01 → 1`, `10 → 2`, `11 → 3`.

use crate::error::{Error, Result};
use crate::precoloring::Precoloring;

/// Maps a proper 4-coloring of the cycle `0, 1, ..., d-1, 0` to the colors
/// of its edges, edge `k` joining vertices `k` and `k+1`.
pub fn tait_precoloring(cycle: &[u8]) -> Result<Precoloring> {
    let d = cycle.len();
    if d < 2 {
        return Err(Error::Arity {
            d,
            reason: "a cycle needs at least two vertices",
        });
    }
    if let Some(c) = cycle.iter().find(|c| !(1..=4).contains(*c)) {
        return Err(Error::Input(format!("vertex color {c} is not in 1..=4")));
    }
    let values: Vec<u8> = (0..d)
        .map(|k| {
            let x = (cycle[k] - 1) ^ (cycle[(k + 1) % d] - 1);
            if x == 0 {
                Err(Error::Input(format!(
                    "vertices {k} and {} share a color",
                    (k + 1) % d
                )))
            } else {
                Ok(x)
            }
        })
        .collect::<Result<_>>()?;
    Ok(Precoloring::new(values).expect("edge colors of a cycle satisfy the parity condition"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precoloring::space;
    use std::collections::HashMap;

    #[test]
    fn examples() {
        assert_eq!(
            tait_precoloring(&[1, 2, 1, 2]).unwrap().values(),
            &[1, 1, 1, 1]
        );
        assert_eq!(
            tait_precoloring(&[1, 2, 3, 2]).unwrap().values(),
            &[1, 3, 3, 1]
        );
        assert!(tait_precoloring(&[1, 1, 2, 3]).is_err());
        assert!(tait_precoloring(&[1, 2, 5]).is_err());
    }

    #[test]
    fn translates_agree() {
        let base = tait_precoloring(&[1, 2, 1, 2]).unwrap();
        for t in 0..4u8 {
            let shifted: Vec<u8> = [1u8, 2, 1, 2].iter().map(|c| ((c - 1) ^ t) + 1).collect();
            assert_eq!(tait_precoloring(&shifted).unwrap(), base);
        }
    }

    #[test]
    fn exactly_four_preimages() {
        for d in 2..=7 {
            let mut hits: HashMap<Precoloring, usize> = HashMap::new();
            for code in 0..4usize.pow(d as u32) {
                let cycle: Vec<u8> = (0..d)
                    .map(|k| (code / 4usize.pow(k as u32) % 4) as u8 + 1)
                    .collect();
                if let Ok(p) = tait_precoloring(&cycle) {
                    *hits.entry(p).or_insert(0) += 1;
                }
            }
            assert_eq!(hits.len(), space(d).unwrap().len(), "d={d}");
            assert!(hits.values().all(|&n| n == 4), "d={d}");
        }
    }
}
