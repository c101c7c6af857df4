//! Floating-point experiments on Euler limits `f_k = R0·(1 + R1/k)^k`,
//! which converge to `f = R0·e^{R1}` away from the divisor support while
//! their zeros and poles collapse into the exponential singularities.

mod region;
mod sphere;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

pub use region::{Circle, Rect, SampleRegion, DEFAULT_EPSILON};
pub use sphere::{chordal_distance, hausdorff_distance, ApproxComplex, SpherePoint};

use crate::algebra::{roots::approximate_roots, Gaussian, Poly};
use crate::error::{Error, Result};
use crate::transalg::TransalgebraicFunction;

/// Tolerance handed to the root finder.
pub const ROOT_TOLERANCE: f64 = 1e-10;

fn to_complex(p: &Poly) -> Vec<Complex64> {
    p.coeffs().iter().map(Gaussian::to_complex64).collect()
}

fn horner(c: &[Complex64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
}

/// `log(1 + w)` without the cancellation of forming `1 + w` for small `w`.
fn log1p(w: Complex64) -> Complex64 {
    let u = Complex64::new(1.0, 0.0) + w;
    let d = u - 1.0;
    if d == Complex64::new(0.0, 0.0) {
        w
    } else {
        u.ln() * (w / d)
    }
}

fn degree(p: &Poly) -> i64 {
    p.degree().map_or(0, |d| d as i64)
}

struct Evaluator {
    num0: Vec<Complex64>,
    den0: Vec<Complex64>,
    num1: Vec<Complex64>,
    den1: Vec<Complex64>,
}

impl Evaluator {
    fn new(f: &TransalgebraicFunction) -> Self {
        Self {
            num0: to_complex(f.rat_part().num()),
            den0: to_complex(f.rat_part().den()),
            num1: to_complex(f.exp_part().num()),
            den1: to_complex(f.exp_part().den()),
        }
    }

    fn parts(&self, z: Complex64) -> (Complex64, Complex64) {
        (
            horner(&self.num0, z) / horner(&self.den0, z),
            horner(&self.num1, z) / horner(&self.den1, z),
        )
    }

    fn limit(&self, z: Complex64) -> Complex64 {
        let (r0, r1) = self.parts(z);
        r0 * r1.exp()
    }

    /// `(1 + x/k)^k = exp(k·log(1 + x/k))`; for integer `k` the choice of
    /// logarithm branch cancels, so the principal one is always safe.
    fn approximant(&self, z: Complex64, k: u64) -> Complex64 {
        let (r0, r1) = self.parts(z);
        let kf = k as f64;
        let base = r1 / kf;
        if (Complex64::new(1.0, 0.0) + base).norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        r0 * (log1p(base) * kf).exp()
    }
}

/// Finite points of the divisor support, approximated.
fn finite_support(f: &TransalgebraicFunction) -> Result<Vec<Complex64>> {
    let mut out = Vec::new();
    for p in [f.rat_part().num(), f.rat_part().den(), f.exp_part().den()] {
        out.extend(approximate_roots(p, ROOT_TOLERANCE)?.into_iter().map(|(r, _)| r));
    }
    Ok(out)
}

/// `max |f_k − f|` over the grid.
pub fn euler_limit_error(f: &TransalgebraicFunction, k: u64, region: &SampleRegion) -> Result<f64> {
    if k < 1 {
        return Err(Error::InvalidArgument("k must be ≥ 1".into()));
    }
    let points = region.points();
    check_exclusion(f, &points, region.epsilon)?;
    let ev = Evaluator::new(f);
    let errors: Vec<f64> = points
        .par_iter()
        .map(|&z| (ev.approximant(z, k) - ev.limit(z)).norm())
        .collect();
    if let Some(bad) = errors.iter().position(|e| !e.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "non-finite error at sample {}",
            SpherePoint::Finite(points[bad])
        )));
    }
    Ok(errors.into_iter().fold(0.0, f64::max))
}

fn check_exclusion(f: &TransalgebraicFunction, points: &[Complex64], epsilon: f64) -> Result<()> {
    let support = finite_support(f)?;
    for &z in points {
        for &s in &support {
            if (z - s).norm() < epsilon {
                return Err(Error::RegionViolatesExclusion {
                    sample: SpherePoint::Finite(z).to_string(),
                    point: SpherePoint::Finite(s).to_string(),
                    epsilon,
                });
            }
        }
    }
    Ok(())
}

/// A zero or pole of `f_k`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Located {
    pub location: SpherePoint,
    pub multiplicity: u64,
    /// Chordal distance to the singularity it is attributed to.
    pub distance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingularityWitness {
    pub point: SpherePoint,
    pub order: u64,
    pub zeros: Vec<Located>,
    pub poles: Vec<Located>,
}

impl SingularityWitness {
    pub fn distinct_locations(&self) -> usize {
        self.zeros.len() + self.poles.len()
    }
}

/// Zeros and poles of `f_k` coming from `(1 + R1/k)^k`, each attributed to
/// the nearest exponential singularity of `f`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CollapseReport {
    pub k: u64,
    pub singularities: Vec<SingularityWitness>,
}

/// `(1 + R1/k)^k = ((num1 + k·den1)/(k·den1))^k`: zeros solve `R1 = −k`,
/// poles are those of `R1` with multiplicity scaled by `k`.
pub fn collapse_witness(f: &TransalgebraicFunction, k: u64) -> Result<CollapseReport> {
    if k < 1 {
        return Err(Error::InvalidArgument("k must be ≥ 1".into()));
    }
    let r1 = f.exp_part();
    let mut singularities: Vec<SingularityWitness> = approximate_roots(r1.den(), ROOT_TOLERANCE)?
        .into_iter()
        .map(|(r, m)| SingularityWitness {
            point: SpherePoint::Finite(r),
            order: m as u64,
            zeros: Vec::new(),
            poles: Vec::new(),
        })
        .collect();
    let at_inf = degree(r1.num()) - degree(r1.den());
    if !r1.is_zero() && at_inf > 0 {
        singularities.push(SingularityWitness {
            point: SpherePoint::Infinity,
            order: at_inf as u64,
            zeros: Vec::new(),
            poles: Vec::new(),
        });
    }
    if singularities.is_empty() {
        return Ok(CollapseReport {
            k,
            singularities,
        });
    }

    let q = r1.num() + &r1.den().scale(&Gaussian::from_int(k as i64));
    let mut zeros: Vec<(SpherePoint, u64)> = approximate_roots(&q, ROOT_TOLERANCE)?
        .into_iter()
        .map(|(r, m)| (SpherePoint::Finite(r), k * m as u64))
        .collect();
    let mut poles: Vec<(SpherePoint, u64)> = approximate_roots(r1.den(), ROOT_TOLERANCE)?
        .into_iter()
        .map(|(r, m)| (SpherePoint::Finite(r), k * m as u64))
        .collect();
    let excess = degree(&q) - degree(r1.den());
    if excess > 0 {
        poles.push((SpherePoint::Infinity, k * excess as u64));
    } else if excess < 0 {
        zeros.push((SpherePoint::Infinity, k * (-excess) as u64));
    }

    let centers: Vec<SpherePoint> = singularities.iter().map(|s| s.point).collect();
    let nearest = |p: SpherePoint| {
        centers
            .iter()
            .enumerate()
            .map(|(i, &c)| (i, chordal_distance(p, c)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("nonempty")
    };
    for (is_zero, list) in [(true, zeros), (false, poles)] {
        for (location, multiplicity) in list {
            let (i, distance) = nearest(location);
            let item = Located {
                location,
                multiplicity,
                distance,
            };
            if is_zero {
                singularities[i].zeros.push(item);
            } else {
                singularities[i].poles.push(item);
            }
        }
    }
    Ok(CollapseReport { k, singularities })
}

fn order_at_infinity(num: &Poly, den: &Poly) -> i64 {
    degree(den) - degree(num)
}

/// Support of `Div(f)` on the sphere, approximated.
pub fn limit_support(f: &TransalgebraicFunction) -> Result<Vec<SpherePoint>> {
    let mut out: Vec<SpherePoint> = finite_support(f)?.into_iter().map(SpherePoint::Finite).collect();
    let rat = f.rat_part();
    let exp = f.exp_part();
    let exp_at_inf = !exp.is_zero() && degree(exp.num()) > degree(exp.den());
    if order_at_infinity(rat.num(), rat.den()) != 0 || exp_at_inf {
        out.push(SpherePoint::Infinity);
    }
    Ok(out)
}

/// Zeros and poles of `f_k` on the sphere, approximated.
pub fn approximant_support(f: &TransalgebraicFunction, k: u64) -> Result<Vec<SpherePoint>> {
    let rat = f.rat_part();
    let exp = f.exp_part();
    let mut out = Vec::new();
    for p in [rat.num(), rat.den()] {
        out.extend(
            approximate_roots(p, ROOT_TOLERANCE)?
                .into_iter()
                .map(|(r, _)| SpherePoint::Finite(r)),
        );
    }
    let mut inf_order = order_at_infinity(rat.num(), rat.den());
    if !exp.is_zero() {
        let q = exp.num() + &exp.den().scale(&Gaussian::from_int(k as i64));
        for p in [&q, exp.den()] {
            out.extend(
                approximate_roots(p, ROOT_TOLERANCE)?
                    .into_iter()
                    .map(|(r, _)| SpherePoint::Finite(r)),
            );
        }
        inf_order += k as i64 * (degree(exp.den()) - degree(&q));
    }
    if inf_order != 0 {
        out.push(SpherePoint::Infinity);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergenceEntry {
    pub k: u64,
    pub sup_error: f64,
    /// Chordal Hausdorff distance between the zero/pole set of `f_k` and
    /// the support of `Div(f)`; absent when either set is empty.
    pub hausdorff: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub entries: Vec<ConvergenceEntry>,
    /// `−slope` of the least-squares line through `(ln k, ln error)`.
    pub decay_exponent: Option<f64>,
}

pub fn convergence_report(
    f: &TransalgebraicFunction,
    ks: &[u64],
    region: &SampleRegion,
) -> Result<ConvergenceReport> {
    if ks.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("k values must be strictly increasing".into()));
    }
    let target = limit_support(f)?;
    let mut entries = Vec::with_capacity(ks.len());
    for &k in ks {
        let sup_error = euler_limit_error(f, k, region)?;
        let approx = approximant_support(f, k)?;
        let hausdorff = hausdorff_distance(&approx, &target).ok();
        entries.push(ConvergenceEntry {
            k,
            sup_error,
            hausdorff,
        });
    }
    let decay_exponent = fit_decay(&entries);
    Ok(ConvergenceReport {
        entries,
        decay_exponent,
    })
}

fn fit_decay(entries: &[ConvergenceEntry]) -> Option<f64> {
    if entries.len() < 2 || entries.iter().any(|e| e.sup_error <= 0.0) {
        return None;
    }
    let pts: Vec<(f64, f64)> = entries
        .iter()
        .map(|e| ((e.k as f64).ln(), e.sup_error.ln()))
        .collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Some(-sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RationalFunction;
    use crate::transalg::transalg_make;

    fn exp_z() -> TransalgebraicFunction {
        TransalgebraicFunction::exponential(RationalFunction::z())
    }

    fn collapse_example() -> TransalgebraicFunction {
        TransalgebraicFunction::exponential(
            RationalFunction::new(Poly::from_ints(&[1]), Poly::from_ints(&[1, -1])).unwrap(),
        )
    }

    #[test]
    fn exponential_error_is_first_order() {
        let region = SampleRegion::circle(Complex64::new(0.0, 0.0), 1.0, 64);
        let e64 = euler_limit_error(&exp_z(), 64, &region).unwrap();
        let e128 = euler_limit_error(&exp_z(), 128, &region).unwrap();
        // |e^z − (1+z/k)^k| ≈ e·|z|²/(2k) at z = 1
        assert!((e64 / (std::f64::consts::E / 128.0) - 1.0).abs() < 0.03);
        assert!((e128 / e64 - 0.5).abs() < 0.02);
    }

    #[test]
    fn rational_limit_is_exact() {
        let f = TransalgebraicFunction::rational(RationalFunction::from_poly(Poly::from_ints(&[1, 1]))).unwrap();
        let region = SampleRegion::circle(Complex64::new(0.0, 0.0), 2.0, 16);
        assert_eq!(euler_limit_error(&f, 7, &region).unwrap(), 0.0);
        assert!(collapse_witness(&f, 10).unwrap().singularities.is_empty());
    }

    #[test]
    fn exclusion_is_enforced() {
        let f = transalg_make(RationalFunction::one(), collapse_example().exp_part().clone()).unwrap();
        let region = SampleRegion::circle(Complex64::new(0.0, 0.0), 1.05, 32);
        assert!(matches!(
            euler_limit_error(&f, 10, &region),
            Err(Error::RegionViolatesExclusion { .. })
        ));
    }

    #[test]
    fn collapse_at_one() {
        let r = collapse_witness(&collapse_example(), 100).unwrap();
        assert_eq!(r.singularities.len(), 1);
        let s = &r.singularities[0];
        assert_eq!(s.zeros.len(), 1);
        assert_eq!(s.zeros[0].multiplicity, 100);
        let SpherePoint::Finite(z) = s.zeros[0].location else { panic!() };
        assert!((z - Complex64::new(1.01, 0.0)).norm() < 1e-9);
        assert_eq!(s.poles.len(), 1);
        assert_eq!(s.poles[0].multiplicity, 100);
        assert!(s.distinct_locations() >= 2);
    }

    #[test]
    fn exponential_zeros_escape() {
        let d = |k| {
            let r = collapse_witness(&exp_z(), k).unwrap();
            assert_eq!(r.singularities[0].point, SpherePoint::Infinity);
            r.singularities[0].zeros[0].distance
        };
        assert!(d(10) > d(100));
        let rep = convergence_report(
            &exp_z(),
            &[16, 32, 64],
            &SampleRegion::circle(Complex64::new(0.0, 0.0), 1.0, 32),
        )
        .unwrap();
        let h: Vec<f64> = rep.entries.iter().map(|e| e.hausdorff.unwrap()).collect();
        assert!(h[0] > h[1] && h[1] > h[2]);
        assert!((rep.decay_exponent.unwrap() - 1.0).abs() < 0.05);
    }
}
