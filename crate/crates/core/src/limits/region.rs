use std::f64::consts::PI;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::ApproxComplex;
use crate::error::{Error, Result};

pub const DEFAULT_EPSILON: f64 = 0.1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub center: [f64; 2],
    pub radius: f64,
    pub count: usize,
}

/// Axis-aligned `nx × ny` grid including its corners.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub min: [f64; 2],
    pub max: [f64; 2],
    pub nx: usize,
    pub ny: usize,
}

/// A finite deterministic sample grid and the exclusion radius around the
/// divisor support.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleRegion {
    pub circles: Vec<Circle>,
    pub rects: Vec<Rect>,
    pub epsilon: f64,
}

impl Default for SampleRegion {
    fn default() -> Self {
        Self {
            circles: Vec::new(),
            rects: Vec::new(),
            epsilon: DEFAULT_EPSILON,
        }
    }
}

impl SampleRegion {
    pub fn circle(center: ApproxComplex, radius: f64, count: usize) -> Self {
        Self::default().with_circle(center, radius, count)
    }

    pub fn with_circle(mut self, center: ApproxComplex, radius: f64, count: usize) -> Self {
        self.circles.push(Circle {
            center: [center.re, center.im],
            radius,
            count,
        });
        self
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = epsilon;
        self
    }

    pub fn points(&self) -> Vec<ApproxComplex> {
        let mut out = Vec::new();
        for c in &self.circles {
            let center = Complex64::new(c.center[0], c.center[1]);
            out.extend((0..c.count).map(|j| {
                center + Complex64::from_polar(c.radius, 2.0 * PI * j as f64 / c.count as f64)
            }));
        }
        for r in &self.rects {
            let step = |lo: f64, hi: f64, n: usize, j: usize| {
                if n <= 1 {
                    lo
                } else {
                    lo + (hi - lo) * j as f64 / (n - 1) as f64
                }
            };
            for i in 0..r.nx {
                for j in 0..r.ny {
                    out.push(Complex64::new(
                        step(r.min[0], r.max[0], r.nx, i),
                        step(r.min[1], r.max[1], r.ny, j),
                    ));
                }
            }
        }
        out
    }
}

fn numbers(s: &str, want: usize, what: &str) -> Result<Vec<f64>> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::InvalidArgument(format!("{what}: {e}")))?;
    if v.len() != want {
        return Err(Error::InvalidArgument(format!(
            "{what} takes {want} numbers, got {}",
            v.len()
        )));
    }
    Ok(v)
}

fn count(x: f64, what: &str) -> Result<usize> {
    if x < 1.0 || x.fract() != 0.0 {
        return Err(Error::InvalidArgument(format!("{what}: count must be a positive integer")));
    }
    Ok(x as usize)
}

/// `circle:cx,cy,r,n` and `rect:x0,y0,x1,y1,nx,ny` items separated by `;`.
impl FromStr for SampleRegion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut region = SampleRegion::default();
        for item in s.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            let (kind, args) = item
                .split_once(':')
                .ok_or_else(|| Error::InvalidArgument(format!("grid item `{item}` has no kind")))?;
            match kind.trim() {
                "circle" => {
                    let v = numbers(args, 4, "circle")?;
                    region.circles.push(Circle {
                        center: [v[0], v[1]],
                        radius: v[2],
                        count: count(v[3], "circle")?,
                    });
                }
                "rect" => {
                    let v = numbers(args, 6, "rect")?;
                    region.rects.push(Rect {
                        min: [v[0], v[1]],
                        max: [v[2], v[3]],
                        nx: count(v[4], "rect")?,
                        ny: count(v[5], "rect")?,
                    });
                }
                other => {
                    return Err(Error::InvalidArgument(format!("unknown grid kind `{other}`")))
                }
            }
        }
        if region.circles.is_empty() && region.rects.is_empty() {
            return Err(Error::InvalidArgument("empty grid".into()));
        }
        Ok(region)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_grid() {
        let r: SampleRegion = "circle:0,0,1,8; rect:-1,-1,1,1,3,2".parse().unwrap();
        assert_eq!(r.points().len(), 8 + 6);
        assert_eq!(r.epsilon, DEFAULT_EPSILON);
        assert!((r.points()[0] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!("circle:0,0,1".parse::<SampleRegion>().is_err());
        assert!("disk:0,0,1,3".parse::<SampleRegion>().is_err());
        assert!("circle:0,0,1,2.5".parse::<SampleRegion>().is_err());
    }
}
