//! Membership labels realized by an arrangement of unit circles in the plane.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use thiserror::Error;

use crate::subset::Subset;

/// Two circles closer than this to tangency, three circles closer than this
/// to a common point, or two centers closer than this count as degenerate.
pub const DEGENERACY_TOLERANCE: f64 = 1e-9;

pub type Pt = [f64; 2];

#[derive(Clone, Debug, PartialEq, Error)]
pub enum ArrangementError {
    #[error("at most 64 disks are supported, got {0}")]
    TooManyDisks(usize),
    #[error("degenerate family: {0}")]
    DegenerateFamily(&'static str),
    #[error("margin {margin} must be positive and below half the feature size {feature}")]
    BadMargin { margin: f64, feature: f64 },
    #[error("subset {0:?} is not realized")]
    NotRealized(Subset),
}

/// Unit disks `B(c_i, 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitDiskFamily {
    centers: Vec<Pt>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ArrangementSummary {
    /// Sorted labels, one per distinct membership vector.
    pub labels: Vec<Subset>,
    /// `witnesses[i]` has membership vector `labels[i]`.
    pub witnesses: Vec<Pt>,
    /// Distance of each witness to the nearest circle.
    pub clearance: Vec<f64>,
}

impl ArrangementSummary {
    pub fn contains(&self, s: Subset) -> bool {
        self.labels.binary_search(&s).is_ok()
    }

    pub fn witness(&self, s: Subset) -> Option<Pt> {
        self.labels.binary_search(&s).ok().map(|i| self.witnesses[i])
    }
}

fn dist(a: Pt, b: Pt) -> f64 {
    libm::hypot(a[0] - b[0], a[1] - b[1])
}

impl UnitDiskFamily {
    pub fn new(centers: Vec<Pt>) -> Result<UnitDiskFamily, ArrangementError> {
        if centers.len() > 64 {
            return Err(ArrangementError::TooManyDisks(centers.len()));
        }
        Ok(UnitDiskFamily { centers })
    }

    pub fn centers(&self) -> &[Pt] {
        &self.centers
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }

    /// Indices of the disks containing `p` (closed disks).
    pub fn label_of(&self, p: Pt) -> Subset {
        Subset::from_indices((0..self.len()).filter(|&i| dist(p, self.centers[i]) <= 1.0))
    }

    /// Distance from `p` to the nearest circle.
    pub fn clearance(&self, p: Pt) -> f64 {
        self.centers.iter().map(|&c| libm::fabs(dist(p, c) - 1.0)).fold(f64::INFINITY, f64::min)
    }

    /// Crossing points of circles `i` and `j`, if they cross.
    pub fn intersection(&self, i: usize, j: usize) -> Option<(Pt, Pt)> {
        circle_intersection(self.centers[i], self.centers[j])
    }

    fn vertices(&self) -> Vec<(usize, usize, Pt)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if let Some((a, b)) = self.intersection(i, j) {
                    out.push((i, j, a));
                    out.push((i, j, b));
                }
            }
        }
        out
    }

    /// Smallest of: center distances, distances from 2 of center distances,
    /// distances between crossing points, and distances from crossing points
    /// to the other circles. `1` for fewer than two disks.
    pub fn feature_size(&self) -> f64 {
        let n = self.len();
        let mut f = 1.0f64;
        for i in 0..n {
            for j in i + 1..n {
                let d = dist(self.centers[i], self.centers[j]);
                f = f.min(d).min(libm::fabs(d - 2.0));
            }
        }
        let verts = self.vertices();
        for (a, &(i, j, p)) in verts.iter().enumerate() {
            for &(_, _, q) in &verts[a + 1..] {
                f = f.min(dist(p, q));
            }
            for k in (0..n).filter(|&k| k != i && k != j) {
                f = f.min(libm::fabs(dist(p, self.centers[k]) - 1.0));
            }
        }
        f
    }

    pub fn check_general_position(&self) -> Result<f64, ArrangementError> {
        let n = self.len();
        for i in 0..n {
            for j in i + 1..n {
                let d = dist(self.centers[i], self.centers[j]);
                if d < DEGENERACY_TOLERANCE {
                    return Err(ArrangementError::DegenerateFamily("coincident centers"));
                }
                if libm::fabs(d - 2.0) < DEGENERACY_TOLERANCE {
                    return Err(ArrangementError::DegenerateFamily("tangent circles"));
                }
            }
        }
        let f = self.feature_size();
        if f < DEGENERACY_TOLERANCE {
            return Err(ArrangementError::DegenerateFamily("three circles through one point"));
        }
        Ok(f)
    }

    pub fn default_margin(&self) -> Result<f64, ArrangementError> {
        Ok(1e-4 * self.check_general_position()?)
    }

    /// Every label attained by an open cell, with a witness point per label.
    pub fn realized_subsets(&self, margin: f64) -> Result<ArrangementSummary, ArrangementError> {
        let feature = self.check_general_position()?;
        if !(margin > 0.0 && margin < feature / 2.0) {
            return Err(ArrangementError::BadMargin { margin, feature });
        }
        let mut best: BTreeMap<Subset, (Pt, f64)> = BTreeMap::new();
        let mut offer = |p: Pt, this: &UnitDiskFamily| {
            let clear = this.clearance(p);
            if clear <= 0.0 {
                return;
            }
            let label = this.label_of(p);
            let entry = best.entry(label).or_insert((p, clear));
            if clear > entry.1 {
                *entry = (p, clear);
            }
        };
        for &c in &self.centers {
            offer(c, self);
        }
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                let Some((a, b)) = self.intersection(i, j) else { continue };
                offer([(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0], self);
                for x in [a, b] {
                    let ni = unit([x[0] - self.centers[i][0], x[1] - self.centers[i][1]]);
                    let nj = unit([x[0] - self.centers[j][0], x[1] - self.centers[j][1]]);
                    for (si, sj) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
                        let dir = unit([si * ni[0] + sj * nj[0], si * ni[1] + sj * nj[1]]);
                        let start = [x[0] + margin * dir[0], x[1] + margin * dir[1]];
                        let label = self.label_of(start);
                        offer(start, self);
                        // walk further into the same cell for a better witness
                        let mut step = 2.0 * margin;
                        while step < 2.0 {
                            let p = [x[0] + step * dir[0], x[1] + step * dir[1]];
                            if self.label_of(p) != label {
                                break;
                            }
                            offer(p, self);
                            step *= 2.0;
                        }
                    }
                }
            }
        }
        let far = self.centers.iter().fold(0.0f64, |m, c| m.max(libm::fabs(c[0])).max(libm::fabs(c[1])));
        offer([far + 3.0, far + 3.0], self);
        let mut labels = Vec::with_capacity(best.len());
        let mut witnesses = Vec::with_capacity(best.len());
        let mut clearance = Vec::with_capacity(best.len());
        for (label, (p, c)) in best {
            labels.push(label);
            witnesses.push(p);
            clearance.push(c);
        }
        Ok(ArrangementSummary { labels, witnesses, clearance })
    }

    pub fn summary(&self) -> Result<ArrangementSummary, ArrangementError> {
        self.realized_subsets(self.default_margin()?)
    }

    pub fn is_subset_realized(&self, s: Subset) -> Result<bool, ArrangementError> {
        Ok(self.summary()?.contains(s))
    }

    pub fn witness_point(&self, s: Subset) -> Result<Pt, ArrangementError> {
        self.summary()?.witness(s).ok_or(ArrangementError::NotRealized(s))
    }
}

fn unit(v: Pt) -> Pt {
    let n = libm::hypot(v[0], v[1]);
    [v[0] / n, v[1] / n]
}

pub fn circle_intersection(a: Pt, b: Pt) -> Option<(Pt, Pt)> {
    let d = dist(a, b);
    if d >= 2.0 || d == 0.0 {
        return None;
    }
    let h = libm::sqrt(1.0 - d * d / 4.0);
    let mid = [(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0];
    let perp = [-(b[1] - a[1]) / d, (b[0] - a[0]) / d];
    Some(([mid[0] + h * perp[0], mid[1] + h * perp[1]], [mid[0] - h * perp[0], mid[1] - h * perp[1]]))
}

/// Maximum number of cells of an arrangement of `n` circles.
pub fn cell_bound(n: usize) -> usize {
    if n == 0 {
        1
    } else {
        n * (n - 1) + 2
    }
}
