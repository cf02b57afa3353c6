//! Closure properties (a) to (i) of a family of cones `K_2, ..., K_8`.
//!
//! Every property is checked on rays only: each operator is linear (or
//! bilinear) and monotone, so images of rays landing in the target cone
//! settle the whole cone. Each image gets an exact membership certificate.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::{membership, vec_flip, vec_gamma, vec_rotate, MembershipCertificate};
use crate::catalog::catalog;
use crate::cone::{cached_bprime5, cached_cone, is_color_invariant, Cone};
use crate::count::count_vector;
use crate::error::{Error, Result};
use crate::format::read_cone;
use crate::linalg::Q;
use crate::vector::CountVector;

/// Ray counts of the published `K_6`, `K_7` and `K_8`.
pub fn published_ray_count(d: usize) -> Option<usize> {
    match d {
        6 => Some(102),
        7 => Some(22605),
        8 => Some(4330),
        _ => None,
    }
}

/// Cones `K_d` keyed by arity.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConeSet {
    cones: BTreeMap<usize, Cone>,
}

impl ConeSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// `K_2, K_3, K_4 = B_d` and `K_5 = B'_5`.
    pub fn regenerated() -> Result<Self> {
        let mut set = Self::new();
        for d in 2..=4 {
            set.insert(cached_cone(d)?.clone());
        }
        set.insert(cached_bprime5()?.clone());
        Ok(set)
    }

    /// Loads every `*.cone` file of a directory. Two files of the same
    /// arity are an error.
    pub fn load_dir(dir: impl AsRef<Path>) -> Result<Self> {
        let mut paths: Vec<_> = std::fs::read_dir(dir)?
            .map(|e| e.map(|e| e.path()))
            .collect::<std::io::Result<_>>()?;
        paths.retain(|p| p.extension().is_some_and(|x| x == "cone"));
        paths.sort();
        let mut set = Self::new();
        for p in paths {
            let cone = read_cone(&p).map_err(|e| Error::Input(format!("{}: {e}", p.display())))?;
            let d = cone.arity();
            if set.insert(cone).is_some() {
                return Err(Error::Input(format!(
                    "{}: a second cone for d = {d}",
                    p.display()
                )));
            }
        }
        Ok(set)
    }

    /// Adds `K_d`, returning the cone it replaces.
    pub fn insert(&mut self, cone: Cone) -> Option<Cone> {
        self.cones.insert(cone.arity(), cone)
    }

    pub fn get(&self, d: usize) -> Option<&Cone> {
        self.cones.get(&d)
    }

    pub fn arities(&self) -> Vec<usize> {
        self.cones.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Cone> {
        self.cones.values()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
}

impl Property {
    pub const ALL: [Property; 9] = [
        Property::A,
        Property::B,
        Property::C,
        Property::D,
        Property::E,
        Property::F,
        Property::G,
        Property::H,
        Property::I,
    ];

    pub fn id(self) -> char {
        (b'a' + self as u8) as char
    }

    pub fn from_id(c: char) -> Option<Self> {
        Self::ALL.into_iter().find(|p| p.id() == c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

/// Certificates for the images of one tuple of source rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayCheck {
    pub rays: Vec<usize>,
    pub certificates: Vec<MembershipCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceReport {
    pub property: Property,
    pub instance: String,
    pub status: Status,
    pub detail: String,
    pub checks: Vec<RayCheck>,
}

impl fmt::Display for InstanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PROP {} {} {} {}",
            self.property.id(),
            self.instance,
            self.status,
            self.detail
        )
    }
}

fn report(property: Property, instance: String, status: Status, detail: String) -> InstanceReport {
    InstanceReport {
        property,
        instance,
        status,
        detail,
        checks: Vec::new(),
    }
}

fn missing(cones: &ConeSet, needed: &[usize]) -> Option<String> {
    let mut gone: Vec<usize> = needed
        .iter()
        .copied()
        .filter(|&d| cones.get(d).is_none())
        .collect();
    gone.sort_unstable();
    gone.dedup();
    (!gone.is_empty()).then(|| {
        let names: Vec<String> = gone.iter().map(|d| format!("K_{d}")).collect();
        format!("missing {}", names.join(", "))
    })
}

fn vector(d: usize, ray: &[BigInt]) -> CountVector {
    CountVector::from_integers(d, ray).expect("ray length matches its arity")
}

/// Membership, answered directly when `x` is a multiple of a ray.
fn certify(x: &CountVector, cone: &Cone) -> Result<MembershipCertificate> {
    if let Some(ints) = x.to_integers() {
        if let Some(k) = cone.find_ray(&ints) {
            let ray = &cone.rays()[k];
            let p = ray
                .iter()
                .position(|v| !v.is_zero())
                .expect("rays are nonzero");
            let mut c = vec![Q::zero(); cone.len()];
            c[k] = Q::new(ints[p].clone(), ray[p].clone());
            return Ok(MembershipCertificate::Inside(c));
        }
    }
    membership(x, cone)
}

/// Applies `op` to every tuple of rays of the source cones and certifies
/// each image in `K_target`.
fn images<F>(
    property: Property,
    instance: String,
    cones: &ConeSet,
    sources: &[usize],
    target: usize,
    op: F,
) -> Result<InstanceReport>
where
    F: Fn(&[CountVector]) -> Result<Vec<CountVector>> + Sync,
{
    let mut needed = sources.to_vec();
    needed.push(target);
    if let Some(why) = missing(cones, &needed) {
        return Ok(report(property, instance, Status::Skipped, why));
    }
    let src: Vec<&Cone> = sources.iter().map(|&d| cones.get(d).unwrap()).collect();
    let dst = cones.get(target).unwrap();
    let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
    for c in &src {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (0..c.len()).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    let checks: Vec<RayCheck> = tuples
        .into_par_iter()
        .map(|rays| {
            let xs: Vec<CountVector> = rays
                .iter()
                .zip(&src)
                .map(|(&k, c)| vector(c.arity(), &c.rays()[k]))
                .collect();
            let certificates = op(&xs)?
                .iter()
                .map(|y| {
                    let cert = certify(y, dst)?;
                    if !cert.verify(y, dst) {
                        return Err(Error::Inconsistent(
                            "membership certificate does not verify".into(),
                        ));
                    }
                    Ok(cert)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(RayCheck { rays, certificates })
        })
        .collect::<Result<_>>()?;
    let total: usize = checks.iter().map(|c| c.certificates.len()).sum();
    let outside: Vec<&RayCheck> = checks
        .iter()
        .filter(|c| c.certificates.iter().any(|m| !m.is_inside()))
        .collect();
    let (status, detail) = match outside.first() {
        None => (Status::Pass, format!("{total} images inside K_{target}")),
        Some(first) => (
            Status::Fail,
            format!(
                "{} of {} ray tuples leave K_{target}, first {:?}",
                outside.len(),
                checks.len(),
                first.rays
            ),
        ),
    };
    Ok(InstanceReport {
        property,
        instance,
        status,
        detail,
        checks,
    })
}

fn prop_a(cones: &ConeSet) -> Result<Vec<InstanceReport>> {
    let mut out = Vec::new();
    for d in 2..=5 {
        let (name, reference) = if d == 5 {
            ("B'_5".to_string(), cached_bprime5()?)
        } else {
            (format!("B_{d}"), cached_cone(d)?)
        };
        let (status, detail) = match cones.get(d) {
            None => (
                Status::Pass,
                format!("K_{d} taken as {name} ({} rays)", reference.len()),
            ),
            Some(k) if k == reference => (
                Status::Pass,
                format!("K_{d} equals {name} ({} rays)", k.len()),
            ),
            Some(k) => (
                Status::Fail,
                format!(
                    "K_{d} has {} rays and differs from {name} ({} rays)",
                    k.len(),
                    reference.len()
                ),
            ),
        };
        out.push(report(Property::A, format!("d={d}"), status, detail));
    }
    Ok(out)
}

fn prop_b(cones: &ConeSet) -> Vec<InstanceReport> {
    (2..=8)
        .map(|d| {
            let instance = format!("d={d}");
            let Some(k) = cones.get(d) else {
                return report(
                    Property::B,
                    instance,
                    Status::Skipped,
                    format!("missing K_{d}"),
                );
            };
            let bad = (0..k.len()).find(|&i| !is_color_invariant(d, &k.rays()[i]));
            match bad {
                None => report(
                    Property::B,
                    instance,
                    Status::Pass,
                    format!("{} rays color invariant", k.len()),
                ),
                Some(i) => report(
                    Property::B,
                    instance,
                    Status::Fail,
                    format!("ray {i} is not color invariant"),
                ),
            }
        })
        .collect()
}

fn r31() -> Result<CountVector> {
    count_vector(&catalog("R_3_1")?)
}

/// All instances of one property, in canonical order.
pub fn verify_closure(property: Property, cones: &ConeSet) -> Result<Vec<InstanceReport>> {
    use Property::*;
    let mut out = Vec::new();
    match property {
        A => out = prop_a(cones)?,
        B => out = prop_b(cones),
        C => {
            for d in 2..=7 {
                out.push(images(C, format!("d={d}"), cones, &[d], d, |x| {
                    Ok(vec![vec_rotate(&x[0], 1), vec_flip(&x[0])])
                })?);
            }
        }
        D => {
            for d1 in 2..=7 {
                for d2 in d1..=7 - d1 {
                    out.push(images(
                        D,
                        format!("d1={d1},d2={d2}"),
                        cones,
                        &[d1, d2],
                        d1 + d2,
                        |x| Ok(vec![vec_gamma(&x[0], &x[1], 0)?]),
                    )?);
                }
            }
        }
        E => {
            let r = r31()?;
            for d in 2..=5 {
                out.push(images(E, format!("d={d}"), cones, &[d], d + 1, |x| {
                    Ok(vec![vec_gamma(&r, &x[0], 1)?])
                })?);
            }
        }
        F => {
            let r = r31()?;
            for d in 3..=7 {
                out.push(images(F, format!("d={d}"), cones, &[d], d - 1, |x| {
                    Ok(vec![vec_gamma(&r, &x[0], 2)?])
                })?);
            }
        }
        G => {
            for d1 in 2..=6 {
                for c in 1..=d1 / 2 {
                    let d2 = 7 + 2 * c - d1;
                    out.push(images(
                        G,
                        format!("d1={d1},c={c},d2={d2}"),
                        cones,
                        &[d1, d2],
                        7,
                        |x| Ok(vec![vec_gamma(&x[0], &x[1], c)?]),
                    )?);
                }
            }
        }
        H => out.push(images(H, "d1=8,d2=7".into(), cones, &[8, 7], 7, |x| {
            Ok(vec![vec_gamma(&x[0], &x[1], 4)?])
        })?),
        I => out.push(images(I, "d1=6,d2=6".into(), cones, &[6, 6], 8, |x| {
            Ok(vec![vec_rotate(&vec_gamma(&x[0], &x[1], 2)?, 2)])
        })?),
    }
    Ok(out)
}

/// Every property in order.
pub fn verify_all(cones: &ConeSet) -> Result<Vec<InstanceReport>> {
    let mut out = Vec::new();
    for p in Property::ALL {
        out.extend(verify_closure(p, cones)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::write_cone;

    fn statuses(r: &[InstanceReport]) -> Vec<(String, Status)> {
        r.iter().map(|x| (x.instance.clone(), x.status)).collect()
    }

    #[test]
    fn property_ids() {
        assert_eq!(Property::A.id(), 'a');
        assert_eq!(Property::I.id(), 'i');
        assert_eq!(Property::from_id('e'), Some(Property::E));
        assert_eq!(Property::from_id('j'), None);
    }

    #[test]
    fn empty_set_skips_everything_but_a() {
        let all = verify_all(&ConeSet::new()).unwrap();
        for r in &all {
            let want = if r.property == Property::A {
                Status::Pass
            } else {
                Status::Skipped
            };
            assert_eq!(r.status, want, "{r}");
        }
    }

    #[test]
    fn regenerated_battery() {
        let cones = ConeSet::regenerated().unwrap();
        let all = verify_all(&cones).unwrap();
        for r in &all {
            let pass = match r.property {
                Property::A => true,
                Property::B | Property::C => r.instance.as_str() <= "d=5",
                Property::D => r.instance == "d1=2,d2=2" || r.instance == "d1=2,d2=3",
                Property::E => ["d=2", "d=3", "d=4"].contains(&r.instance.as_str()),
                Property::F => ["d=3", "d=4", "d=5"].contains(&r.instance.as_str()),
                _ => false,
            };
            let want = if pass { Status::Pass } else { Status::Skipped };
            assert_eq!(r.status, want, "{r}");
            for check in &r.checks {
                assert!(check.certificates.iter().all(|c| c.is_inside()));
            }
        }
    }

    #[test]
    fn b5_is_not_k5() {
        let mut cones = ConeSet::regenerated().unwrap();
        cones.insert(cached_cone(5).unwrap().clone());
        let a = verify_closure(Property::A, &cones).unwrap();
        assert_eq!(a[3].status, Status::Fail);
        // γ_0 of B_2 with B_3 still lands in B_5
        let d = verify_closure(Property::D, &cones).unwrap();
        assert_eq!(statuses(&d)[1], ("d1=2,d2=3".into(), Status::Pass));
    }

    #[test]
    fn failures_are_reported() {
        // a cone missing one ray of B_4 is not closed under γ_0
        let mut cones = ConeSet::regenerated().unwrap();
        let b4 = cached_cone(4).unwrap();
        let target = vec_gamma(
            &vector(2, &cached_cone(2).unwrap().rays()[0]),
            &vector(2, &cached_cone(2).unwrap().rays()[0]),
            0,
        )
        .unwrap();
        let k = b4.find_ray(&target.to_integers().unwrap());
        let cut = match k {
            Some(k) => b4.without(k),
            None => {
                let k = (0..b4.len())
                    .find(|&k| !membership(&target, &b4.without(k)).unwrap().is_inside())
                    .expect("some ray is needed");
                b4.without(k)
            }
        };
        cones.insert(cut);
        let d = verify_closure(Property::D, &cones).unwrap();
        assert_eq!(d[0].status, Status::Fail);
        assert!(d[0].checks[0].certificates[0].verify(&target, cones.get(4).unwrap()));
    }

    #[test]
    fn load_dir_reads_cone_files() {
        let dir = tempfile::tempdir().unwrap();
        for d in 2..=3 {
            write_cone(
                dir.path().join(format!("K_{d}.cone")),
                cached_cone(d).unwrap(),
            )
            .unwrap();
        }
        std::fs::write(dir.path().join("notes.txt"), "ignored").unwrap();
        let set = ConeSet::load_dir(dir.path()).unwrap();
        assert_eq!(set.arities(), vec![2, 3]);
        write_cone(dir.path().join("again.cone"), cached_cone(2).unwrap()).unwrap();
        assert!(ConeSet::load_dir(dir.path()).is_err());
    }

    #[test]
    fn report_line_format() {
        let r = report(
            Property::B,
            "d=6".into(),
            Status::Skipped,
            "missing K_6".into(),
        );
        assert_eq!(r.to_string(), "PROP b d=6 SKIPPED missing K_6");
    }
}
