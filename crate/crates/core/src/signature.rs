//! Signed non-crossing partial matchings of the boundary positions and
//! their compatibility with precolorings.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::precoloring::{space, Precoloring, PrecoloringSpace, MAX_ARITY};

/// The three unordered color pairs, in the order used for compatibility
/// matrices: `12`, `13`, `23`.
pub const COLOR_PAIRS: [(u8, u8); 3] = [(1, 2), (1, 3), (2, 3)];

/// One matched pair `{a, b}` with `a < b` and its sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord {
    pub a: u8,
    pub b: u8,
    /// `+1` for a chain of even length, `-1` for odd.
    pub sign: i8,
}

/// A `d`-signature. Chords are disjoint, pairwise non-crossing and kept
/// sorted by their smaller endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    d: usize,
    chords: Vec<Chord>,
}

impl Signature {
    /// Builds a signature from `({a, b}, sign)` triples in any order.
    pub fn new(d: usize, pairs: impl IntoIterator<Item = (usize, usize, i8)>) -> Result<Self> {
        let mut chords = Vec::new();
        for (x, y, sign) in pairs {
            let (a, b) = (x.min(y), x.max(y));
            if a == b || b >= d || !(sign == 1 || sign == -1) {
                return Err(Error::Input(format!(
                    "bad chord ({x}, {y}, {sign}) for d = {d}"
                )));
            }
            chords.push(Chord {
                a: a as u8,
                b: b as u8,
                sign,
            });
        }
        chords.sort();
        let sig = Signature { d, chords };
        if !sig.is_disjoint() || !sig.is_non_crossing() {
            return Err(Error::Input(format!(
                "{sig} is not a non-crossing matching"
            )));
        }
        Ok(sig)
    }

    pub fn arity(&self) -> usize {
        self.d
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn len(&self) -> usize {
        self.chords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    fn is_disjoint(&self) -> bool {
        let mut seen = vec![false; self.d];
        for c in &self.chords {
            for x in [c.a, c.b] {
                if std::mem::replace(&mut seen[x as usize], true) {
                    return false;
                }
            }
        }
        true
    }

    fn is_non_crossing(&self) -> bool {
        self.chords.iter().all(|p| {
            self.chords
                .iter()
                .all(|q| !(p.a < q.a && q.a < p.b && p.b < q.b))
        })
    }

    /// Number of `+1` chords. Only signatures whose count has the parity of
    /// `d` are compatible with any precoloring.
    pub fn plus_count(&self) -> usize {
        self.chords.iter().filter(|c| c.sign == 1).count()
    }

    /// The precolorings compatible with this signature in colors `(i, j)`.
    pub fn compatible_precolorings(&self, i: u8, j: u8) -> Vec<Precoloring> {
        let k = 6 - i - j;
        let mut out = Vec::new();
        for mask in 0..(1u32 << self.chords.len()) {
            let mut values = vec![k; self.d];
            for (n, c) in self.chords.iter().enumerate() {
                let flip = mask >> n & 1 == 1;
                let (x, y) = match (c.sign, flip) {
                    (-1, false) => (i, i),
                    (-1, true) => (j, j),
                    (_, false) => (i, j),
                    (_, true) => (j, i),
                };
                values[c.a as usize] = x;
                values[c.b as usize] = y;
            }
            if let Ok(p) = Precoloring::new(values) {
                out.push(p);
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, c) in self.chords.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            let s = if c.sign > 0 { '+' } else { '-' };
            write!(f, "({{{},{}}},{s})", c.a, c.b)?;
        }
        write!(f, "}}")
    }
}

/// Whether `psi` is compatible in colors `i, j` with `sig`: the matched
/// positions are exactly those colored `i` or `j`, and a chord joins two
/// equal colors iff its sign is `-1`.
pub fn compatible(psi: &Precoloring, i: u8, j: u8, sig: &Signature) -> bool {
    let v = psi.values();
    if v.len() != sig.d || i == j {
        return false;
    }
    let mut matched = vec![false; sig.d];
    for c in &sig.chords {
        matched[c.a as usize] = true;
        matched[c.b as usize] = true;
        let equal = v[c.a as usize] == v[c.b as usize];
        if equal != (c.sign == -1) {
            return false;
        }
    }
    v.iter()
        .zip(&matched)
        .all(|(&color, &m)| m == (color == i || color == j))
}

/// All non-crossing partial matchings of `0..d`, each as a sorted list of
/// pairs.
pub fn non_crossing_matchings(d: usize) -> Vec<Vec<(u8, u8)>> {
    // positions in [lo, hi) must be matched among themselves
    fn rec(lo: usize, hi: usize) -> Vec<Vec<(u8, u8)>> {
        if lo >= hi {
            return vec![Vec::new()];
        }
        let mut out = rec(lo + 1, hi);
        for partner in lo + 1..hi {
            let inner = rec(lo + 1, partner);
            let outer = rec(partner + 1, hi);
            for a in &inner {
                for b in &outer {
                    let mut m = vec![(lo as u8, partner as u8)];
                    m.extend_from_slice(a);
                    m.extend_from_slice(b);
                    m.sort();
                    out.push(m);
                }
            }
        }
        out
    }
    rec(0, d)
}

/// All `d`-signatures: ordered by number of chords, then by the chord
/// list, then by sign vector with `+1` before `-1`.
pub fn enumerate_signatures(d: usize) -> Vec<Signature> {
    let mut matchings = non_crossing_matchings(d);
    matchings.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    let mut out = Vec::new();
    for m in matchings {
        for mask in 0..(1u32 << m.len()) {
            // the high bit of the mask drives the first chord so that the
            // sign vectors come out in lexicographic order
            let chords = m
                .iter()
                .enumerate()
                .map(|(n, &(a, b))| Chord {
                    a,
                    b,
                    sign: if mask >> (m.len() - 1 - n) & 1 == 0 {
                        1
                    } else {
                        -1
                    },
                })
                .collect();
            out.push(Signature { d, chords });
        }
    }
    out
}

/// The cached set `S_d` with lookup and the 0/1 compatibility matrices
/// `A_ij`, stored row-wise as lists of signature indices.
#[derive(Debug)]
pub struct SignatureSpace {
    d: usize,
    list: Vec<Signature>,
    index: HashMap<Signature, usize>,
    /// `rows[p][psi]`: indices of signatures compatible with precoloring
    /// `psi` in color pair `COLOR_PAIRS[p]`, ascending.
    rows: [Vec<Vec<usize>>; 3],
}

impl SignatureSpace {
    fn build(d: usize, pspace: &PrecoloringSpace) -> Self {
        let list = enumerate_signatures(d);
        let index = list
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let rows = COLOR_PAIRS.map(|(i, j)| {
            let mut rows = vec![Vec::new(); pspace.len()];
            for (s_idx, sig) in list.iter().enumerate() {
                for psi in sig.compatible_precolorings(i, j) {
                    let p = pspace.index_of(psi.values()).expect("valid precoloring");
                    rows[p].push(s_idx);
                }
            }
            rows
        });
        SignatureSpace {
            d,
            list,
            index,
            rows,
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

    pub fn get(&self, i: usize) -> &Signature {
        &self.list[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Signature> {
        self.list.iter()
    }

    pub fn index_of(&self, sig: &Signature) -> Option<usize> {
        self.index.get(sig).copied()
    }

    /// Signatures compatible with precoloring `psi` (by index) in color
    /// pair number `pair` (an index into [`COLOR_PAIRS`]).
    pub fn compatible_with(&self, pair: usize, psi: usize) -> &[usize] {
        &self.rows[pair][psi]
    }

    /// `A_ij y` for an integer-like witness vector.
    pub fn apply<T>(&self, pair: usize, y: &[T]) -> Vec<T>
    where
        T: Clone + num_traits::Zero + for<'a> std::ops::AddAssign<&'a T>,
    {
        self.rows[pair]
            .iter()
            .map(|row| {
                let mut acc = T::zero();
                for &s in row {
                    acc += &y[s];
                }
                acc
            })
            .collect()
    }
}

static SIGNATURES: [OnceLock<SignatureSpace>; MAX_ARITY + 1] =
    [const { OnceLock::new() }; MAX_ARITY + 1];

/// The cached signature space `S_d` for `2 <= d <= 10`.
pub fn signature_space(d: usize) -> Result<&'static SignatureSpace> {
    let pspace = space(d)?;
    Ok(SIGNATURES[d].get_or_init(|| SignatureSpace::build(d, pspace)))
}
