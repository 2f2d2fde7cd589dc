//! Plane regions of finite Lebesgue measure (subsets of `C`, used by the
//! Weyl-transform experiments which run at n = 1).

use crate::C64;

/// A measurable region in the plane.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RegionSpec {
    Disk {
        center: (f64, f64),
        radius: f64,
    },
    Rectangle {
        x0: f64,
        x1: f64,
        y0: f64,
        y1: f64,
    },
    /// Upper half (`y >= cy`) of the annulus `r_inner <= |z - c| <= r_outer`.
    HalfAnnulus {
        center: (f64, f64),
        r_inner: f64,
        r_outer: f64,
    },
    Union {
        parts: Vec<RegionSpec>,
    },
    /// The whole plane (infinite measure); `E_A` with this region is the
    /// identity.
    All,
    Empty,
}

/// A measure value together with an error bound (0 for closed forms).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureEstimate {
    pub value: f64,
    pub error_bound: f64,
}

impl RegionSpec {
    pub fn contains(&self, z: C64) -> bool {
        match self {
            RegionSpec::Disk { center, radius } => {
                let d = z - C64::new(center.0, center.1);
                d.norm_sqr() <= radius * radius
            }
            RegionSpec::Rectangle { x0, x1, y0, y1 } => {
                z.re >= *x0 && z.re <= *x1 && z.im >= *y0 && z.im <= *y1
            }
            RegionSpec::HalfAnnulus {
                center,
                r_inner,
                r_outer,
            } => {
                let d = z - C64::new(center.0, center.1);
                let r = d.norm();
                r >= *r_inner && r <= *r_outer && d.im >= 0.0
            }
            RegionSpec::Union { parts } => parts.iter().any(|p| p.contains(z)),
            RegionSpec::All => true,
            RegionSpec::Empty => false,
        }
    }

    /// Bounding disk radius about the origin, if finite.
    pub fn bounding_radius(&self) -> Option<f64> {
        match self {
            RegionSpec::Disk { center, radius } => {
                Some((center.0 * center.0 + center.1 * center.1).sqrt() + radius)
            }
            RegionSpec::Rectangle { x0, x1, y0, y1 } => {
                let m = x0.abs().max(x1.abs());
                let n = y0.abs().max(y1.abs());
                Some((m * m + n * n).sqrt())
            }
            RegionSpec::HalfAnnulus { center, r_outer, .. } => {
                Some((center.0 * center.0 + center.1 * center.1).sqrt() + r_outer)
            }
            RegionSpec::Union { parts } => {
                let mut r: f64 = 0.0;
                for p in parts {
                    r = r.max(p.bounding_radius()?);
                }
                Some(r)
            }
            RegionSpec::All => None,
            RegionSpec::Empty => Some(0.0),
        }
    }

    /// Lebesgue measure: closed form where available, else a grid count with
    /// the half-cell error bound reported.
    pub fn measure(&self) -> MeasureEstimate {
        match self {
            RegionSpec::Disk { radius, .. } => MeasureEstimate {
                value: std::f64::consts::PI * radius * radius,
                error_bound: 0.0,
            },
            RegionSpec::Rectangle { x0, x1, y0, y1 } => MeasureEstimate {
                value: (x1 - x0).max(0.0) * (y1 - y0).max(0.0),
                error_bound: 0.0,
            },
            RegionSpec::HalfAnnulus {
                r_inner, r_outer, ..
            } => MeasureEstimate {
                value: 0.5 * std::f64::consts::PI * (r_outer * r_outer - r_inner * r_inner),
                error_bound: 0.0,
            },
            RegionSpec::Union { parts } => {
                if parts.is_empty() {
                    return MeasureEstimate { value: 0.0, error_bound: 0.0 };
                }
                if self.parts_pairwise_disjoint() {
                    let value = parts.iter().map(|p| p.measure().value).sum();
                    let error_bound = parts.iter().map(|p| p.measure().error_bound).sum();
                    MeasureEstimate { value, error_bound }
                } else {
                    self.grid_measure()
                }
            }
            RegionSpec::All => MeasureEstimate {
                value: f64::INFINITY,
                error_bound: 0.0,
            },
            RegionSpec::Empty => MeasureEstimate { value: 0.0, error_bound: 0.0 },
        }
    }

    fn parts_pairwise_disjoint(&self) -> bool {
        let RegionSpec::Union { parts } = self else {
            return true;
        };
        // conservative test via bounding disks
        let info: Vec<Option<(C64, f64)>> = parts
            .iter()
            .map(|p| match p {
                RegionSpec::Disk { center, radius } => {
                    Some((C64::new(center.0, center.1), *radius))
                }
                RegionSpec::Rectangle { x0, x1, y0, y1 } => {
                    let c = C64::new(0.5 * (x0 + x1), 0.5 * (y0 + y1));
                    let r = 0.5 * ((x1 - x0).hypot(y1 - y0));
                    Some((c, r))
                }
                RegionSpec::HalfAnnulus { center, r_outer, .. } => {
                    Some((C64::new(center.0, center.1), *r_outer))
                }
                _ => None,
            })
            .collect();
        for i in 0..info.len() {
            for j in i + 1..info.len() {
                match (info[i], info[j]) {
                    (Some((ci, ri)), Some((cj, rj))) => {
                        if (ci - cj).norm() < ri + rj {
                            return false;
                        }
                    }
                    _ => return false,
                }
            }
        }
        true
    }

    /// Grid count on the bounding box; error bound = boundary cells × cell
    /// area (every boundary cell is at most half misclassified).
    fn grid_measure(&self) -> MeasureEstimate {
        let r = self.bounding_radius().unwrap_or(0.0);
        if r == 0.0 {
            return MeasureEstimate { value: 0.0, error_bound: 0.0 };
        }
        let m = 2000usize;
        let h = 2.0 * r / m as f64;
        let cell = h * h;
        let mut inside = 0u64;
        let mut boundary = 0u64;
        for i in 0..m {
            for j in 0..m {
                let x = -r + (i as f64 + 0.5) * h;
                let y = -r + (j as f64 + 0.5) * h;
                let c = self.contains(C64::new(x, y));
                if c {
                    inside += 1;
                }
                // boundary detection by corner disagreement
                let corners = [
                    self.contains(C64::new(x - 0.5 * h, y - 0.5 * h)),
                    self.contains(C64::new(x + 0.5 * h, y - 0.5 * h)),
                    self.contains(C64::new(x - 0.5 * h, y + 0.5 * h)),
                    self.contains(C64::new(x + 0.5 * h, y + 0.5 * h)),
                ];
                if corners.iter().any(|&b| b != corners[0]) {
                    boundary += 1;
                }
            }
        }
        MeasureEstimate {
            value: inside as f64 * cell,
            error_bound: 0.5 * boundary as f64 * cell,
        }
    }
}

/// Lebesgue measure of a region (value only; see [`RegionSpec::measure`] for
/// the error bound).
pub fn region_measure(region: &RegionSpec) -> f64 {
    region.measure().value
}
