//! Boundary precolorings and the indexing of `P_d`.
//!
//! A `d`-precoloring assigns one of the colors `1, 2, 3` to every boundary
//! position `0..d` such that each color class has the parity of `d`. The
//! set of all of them, in lexicographic order of `(ψ(0), …, ψ(d-1))`, is
//! the coordinate system used by every count vector, cone and file in this
//! crate.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest boundary arity for which a [`PrecoloringSpace`] can be built.
pub const MAX_ARITY: usize = 10;

/// The six permutations of the colors `1, 2, 3`, as images of `[1, 2, 3]`.
pub const COLOR_PERMUTATIONS: [[u8; 3]; 6] = [
    [1, 2, 3],
    [1, 3, 2],
    [2, 1, 3],
    [2, 3, 1],
    [3, 1, 2],
    [3, 2, 1],
];

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Precoloring(Vec<u8>);

impl Precoloring {
    pub fn new(values: Vec<u8>) -> Result<Self> {
        if Self::is_valid(&values) {
            Ok(Precoloring(values))
        } else {
            Err(Error::Precoloring(values))
        }
    }

    /// True when `values` has length at least two, uses colors `1..=3`
    /// and satisfies the parity condition.
    pub fn is_valid(values: &[u8]) -> bool {
        let d = values.len();
        if d < 2 {
            return false;
        }
        let mut counts = [0usize; 3];
        for &c in values {
            if !(1..=3).contains(&c) {
                return false;
            }
            counts[(c - 1) as usize] += 1;
        }
        counts.iter().all(|n| n % 2 == d % 2)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    /// `r_t(ψ)`, defined by `r_t(ψ)((i + t) mod d) = ψ(i)`.
    pub fn rotate(&self, t: usize) -> Self {
        let d = self.arity();
        let mut out = vec![0; d];
        for (i, &c) in self.0.iter().enumerate() {
            out[(i + t) % d] = c;
        }
        Precoloring(out)
    }

    /// `f(ψ)(i) = ψ(d - 1 - i)`.
    pub fn flip(&self) -> Self {
        Precoloring(self.0.iter().rev().copied().collect())
    }

    /// Replaces every color `c` by `perm[c - 1]`.
    pub fn recolor(&self, perm: &[u8; 3]) -> Self {
        Precoloring(self.0.iter().map(|&c| perm[(c - 1) as usize]).collect())
    }

    fn code(values: &[u8]) -> usize {
        values.iter().fold(0, |acc, &c| acc * 3 + (c - 1) as usize)
    }
}

impl std::fmt::Display for Precoloring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// All `d`-precolorings together with index lookup and the coordinate
/// permutations induced by rotation, flip and recoloring.
#[derive(Debug)]
pub struct PrecoloringSpace {
    d: usize,
    list: Vec<Precoloring>,
    code_to_index: Vec<u32>,
}

impl PrecoloringSpace {
    #[allow(clippy::needless_range_loop)]
    fn build(d: usize) -> Self {
        let total = 3usize.pow(d as u32);
        let mut list = Vec::new();
        let mut code_to_index = vec![u32::MAX; total];
        let mut values = vec![1u8; d];
        for code in 0..total {
            // base-3 digits, most significant first, give lexicographic order
            let mut rest = code;
            for slot in values.iter_mut().rev() {
                *slot = (rest % 3) as u8 + 1;
                rest /= 3;
            }
            if Precoloring::is_valid(&values) {
                code_to_index[code] = list.len() as u32;
                list.push(Precoloring(values.clone()));
            }
        }
        PrecoloringSpace {
            d,
            list,
            code_to_index,
        }
    }

    pub fn arity(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn get(&self, index: usize) -> &Precoloring {
        &self.list[index]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Precoloring> {
        self.list.iter()
    }

    /// Index of a color sequence, or `None` if it is not a `d`-precoloring.
    pub fn index_of(&self, values: &[u8]) -> Option<usize> {
        if values.len() != self.d || values.iter().any(|c| !(1..=3).contains(c)) {
            return None;
        }
        match self.code_to_index[Precoloring::code(values)] {
            u32::MAX => None,
            i => Some(i as usize),
        }
    }

    fn permutation(&self, map: impl Fn(&Precoloring) -> Precoloring) -> Vec<usize> {
        self.list
            .iter()
            .map(|p| {
                self.index_of(map(p).values())
                    .expect("closed under symmetry")
            })
            .collect()
    }

    /// `perm[i]` is the index of `r_t(ψ_i)`.
    pub fn rotation_permutation(&self, t: usize) -> Vec<usize> {
        self.permutation(|p| p.rotate(t % self.d))
    }

    /// `perm[i]` is the index of `f(ψ_i)`.
    pub fn flip_permutation(&self) -> Vec<usize> {
        self.permutation(Precoloring::flip)
    }

    pub fn recolor_permutation(&self, perm: &[u8; 3]) -> Vec<usize> {
        self.permutation(|p| p.recolor(perm))
    }

    /// Orbit representative (smallest index) of every precoloring under
    /// permutations of colors.
    pub fn color_orbit_representatives(&self) -> Vec<usize> {
        let perms: Vec<Vec<usize>> = COLOR_PERMUTATIONS
            .iter()
            .map(|p| self.recolor_permutation(p))
            .collect();
        (0..self.len())
            .map(|i| perms.iter().map(|p| p[i]).min().unwrap())
            .collect()
    }
}

static SPACES: [OnceLock<PrecoloringSpace>; MAX_ARITY + 1] =
    [const { OnceLock::new() }; MAX_ARITY + 1];

/// The cached space `P_d`.
pub fn space(d: usize) -> Result<&'static PrecoloringSpace> {
    if !(2..=MAX_ARITY).contains(&d) {
        return Err(Error::Arity {
            d,
            reason: "precoloring spaces exist for 2 <= d <= 10",
        });
    }
    Ok(SPACES[d].get_or_init(|| PrecoloringSpace::build(d)))
}

/// All `d`-precolorings in lexicographic order.
pub fn enumerate_precolorings(d: usize) -> Result<Vec<Precoloring>> {
    Ok(space(d)?.list.clone())
}

const PSI_5A: [u8; 5] = [1, 1, 2, 3, 1];
const PSI_5B: [u8; 5] = [1, 2, 1, 1, 3];

fn psi_5(table: &[u8; 5], i: usize) -> Precoloring {
    Precoloring((0..5).map(|j| table[(j + 5 - i % 5) % 5]).collect())
}

/// `ψ^{5,a}_i`: the value at `j` is looked up from `(j - i) mod 5` in the
/// column `1, 1, 2, 3, 1`.
pub fn psi_5a(i: usize) -> Precoloring {
    psi_5(&PSI_5A, i)
}

/// `ψ^{5,b}_i`: the value at `j` is looked up from `(j - i) mod 5` in the
/// column `1, 2, 1, 1, 3`.
pub fn psi_5b(i: usize) -> Precoloring {
    psi_5(&PSI_5B, i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_count(d: usize) -> usize {
        let mut n = 0;
        for code in 0..3usize.pow(d as u32) {
            let mut v = Vec::new();
            let mut r = code;
            for _ in 0..d {
                v.push((r % 3) as u8 + 1);
                r /= 3;
            }
            if Precoloring::is_valid(&v) {
                n += 1;
            }
        }
        n
    }

    #[test]
    fn sizes_match_filter_of_all_functions() {
        assert_eq!(space(2).unwrap().len(), 3);
        assert_eq!(space(3).unwrap().len(), 6);
        assert_eq!(space(5).unwrap().len(), 60);
        for d in 2..=8 {
            assert_eq!(space(d).unwrap().len(), brute_count(d), "d={d}");
        }
    }

    #[test]
    fn small_spaces_are_as_expected() {
        let p2: Vec<_> = enumerate_precolorings(2).unwrap();
        assert_eq!(
            p2.iter().map(|p| p.values().to_vec()).collect::<Vec<_>>(),
            vec![vec![1, 1], vec![2, 2], vec![3, 3]]
        );
        let p3 = enumerate_precolorings(3).unwrap();
        for p in &p3 {
            let mut v = p.values().to_vec();
            v.sort();
            assert_eq!(v, vec![1, 2, 3]);
        }
    }

    #[test]
    fn order_is_lexicographic() {
        let s = space(6).unwrap();
        for w in s.list.windows(2) {
            assert!(w[0] < w[1]);
        }
        for (i, p) in s.iter().enumerate() {
            assert_eq!(s.index_of(p.values()), Some(i));
        }
        assert_eq!(s.index_of(&[1, 1, 1, 1, 1, 2]), None);
    }

    #[test]
    fn rotation_matches_definition() {
        let p = Precoloring::new(vec![1, 2, 3, 3, 3]).unwrap();
        // r_1 moves the last color to the front
        assert_eq!(p.rotate(1).values(), &[3, 1, 2, 3, 3]);
        assert_eq!(p.flip().values(), &[3, 3, 3, 2, 1]);
        assert_eq!(p.rotate(0), p);
    }

    #[test]
    fn psi_tables() {
        assert_eq!(psi_5a(0).values(), &[1, 1, 2, 3, 1]);
        assert_eq!(psi_5b(0).values(), &[1, 2, 1, 1, 3]);
        assert_eq!(psi_5a(1).values(), &[1, 1, 1, 2, 3]);
        for i in 0..5 {
            assert!(Precoloring::is_valid(psi_5a(i).values()));
            assert!(Precoloring::is_valid(psi_5b(i).values()));
            assert_eq!(psi_5a(i), psi_5a(0).rotate(i));
        }
    }

    #[test]
    fn the_ten_psis_represent_all_color_orbits_of_p5() {
        let s = space(5).unwrap();
        let reps = s.color_orbit_representatives();
        let mut orbits: Vec<usize> = reps.clone();
        orbits.sort();
        orbits.dedup();
        assert_eq!(orbits.len(), 10);
        let mut hit: Vec<usize> = (0..5)
            .flat_map(|i| [psi_5a(i), psi_5b(i)])
            .map(|p| reps[s.index_of(p.values()).unwrap()])
            .collect();
        hit.sort();
        hit.dedup();
        assert_eq!(hit, orbits);
    }
}
