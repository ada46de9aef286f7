use alloc::vec::Vec;

use super::{planar, verified_unit_threshold, ConstructError};
use crate::arrangement::{ArrangementSummary, Pt, UnitDiskFamily};
use crate::geometry::Embedding;
use crate::graph::{DichotomousGraph, EdgeKind, VertexId};
use crate::subset::Subset;

/// Side of the equilateral triangle whose unit disks realize all 8 subsets.
pub const K3M_SIDE: f64 = 1.2;
/// Distance of the three petal centers from the central disk.
pub const CENTRAL_PETAL_RADIUS: f64 = 0.55;
/// Side of the square carrying four disks in cyclic order.
pub const CYCLIC_FOUR_SIDE: f64 = 0.9;

pub fn k3m_template() -> UnitDiskFamily {
    let r = K3M_SIDE / libm::sqrt(3.0);
    UnitDiskFamily::new(polygon(3, r, core::f64::consts::FRAC_PI_2)).expect("three disks")
}

fn polygon(k: usize, r: f64, phase: f64) -> Vec<Pt> {
    (0..k)
        .map(|i| {
            let t = phase + 2.0 * core::f64::consts::PI * i as f64 / k as f64;
            [r * libm::cos(t), r * libm::sin(t)]
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum K4Variant {
    /// Disk 0 at the origin, disks 1..4 spread on a circle of radius `ρ`.
    CentralPetal(f64),
    /// Disks 0..4 in cyclic order on the corners of a square of side `s`.
    CyclicFour(f64),
}

/// A four-disk template with `assignment[i]` the disk of the `i`-th vertex
/// of `U`.
#[derive(Clone, Debug, PartialEq)]
pub struct K4Template {
    pub variant: K4Variant,
    pub assignment: [usize; 4],
}

impl K4Variant {
    pub fn family(self) -> UnitDiskFamily {
        let centers = match self {
            K4Variant::CentralPetal(rho) => {
                let mut c = Vec::from([[0.0, 0.0]]);
                c.extend(polygon(3, rho, core::f64::consts::FRAC_PI_2));
                c
            }
            K4Variant::CyclicFour(s) => polygon(4, s / libm::sqrt(2.0), core::f64::consts::FRAC_PI_4),
        };
        UnitDiskFamily::new(centers).expect("four disks")
    }

    /// Disk-index subsets the template is meant to miss.
    pub fn declared_missing(self) -> [Subset; 2] {
        match self {
            K4Variant::CentralPetal(_) => [Subset::singleton(0), Subset::from_indices([1, 2, 3])],
            K4Variant::CyclicFour(_) => [Subset::from_indices([0, 2]), Subset::from_indices([1, 3])],
        }
    }
}

/// Sides `(U, W)` of a complete bipartite graph with `|U| = size`.
fn sides_with(g: &DichotomousGraph, size: usize) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
    let (a, b) = g.complete_bipartite_sides()?;
    if a.len() == size {
        Some((a, b))
    } else if b.len() == size {
        Some((b, a))
    } else {
        None
    }
}

fn subset_of(g: &DichotomousGraph, u: &[VertexId], w: VertexId) -> Subset {
    Subset::from_indices((0..u.len()).filter(|&i| g.kind(u[i], w) == Some(EdgeKind::Short)))
}

fn place(
    g: &DichotomousGraph,
    u: &[VertexId],
    w: &[VertexId],
    family: &UnitDiskFamily,
    summary: &ArrangementSummary,
    disk_of: &[usize],
) -> Result<Embedding, ConstructError> {
    let mut points = alloc::vec![[0.0; 2]; g.n()];
    for (i, &v) in u.iter().enumerate() {
        points[v.0] = family.centers()[disk_of[i]];
    }
    for &x in w {
        let s = subset_of(g, u, x);
        let disks = Subset::from_indices(s.iter().map(|i| disk_of[i]));
        points[x.0] = summary.witness(disks).ok_or(crate::arrangement::ArrangementError::NotRealized(disks))?;
    }
    Ok(planar(&points))
}

/// Realizes `K_{3,m}` (or `K_{a,m}` with `a < 3`, using part of the same
/// template) by placing `W` at the witness points of the triangle template.
pub fn realize_k3m(g: &DichotomousGraph) -> Result<Embedding, ConstructError> {
    let (u, w) = (1..=3)
        .rev()
        .find_map(|s| sides_with(g, s))
        .ok_or(ConstructError::NotCompleteBipartite(3))?;
    let family = k3m_template();
    let summary = family.summary()?;
    let disk_of: Vec<usize> = (0..u.len()).collect();
    let emb = place(g, &u, &w, &family, &summary, &disk_of)?;
    verified_unit_threshold(g, emb, "k3m")
}

/// Picks a template for the family of short-neighbor subsets of `W`.
pub fn choose_k4_template(subsets: &[Subset]) -> K4Template {
    let mut family: Vec<Subset> = subsets.to_vec();
    family.sort();
    family.dedup();
    let pairs: Vec<Subset> = family.iter().copied().filter(|s| s.len() == 2).collect();
    if pairs.len() >= 3 {
        let center = (0..4)
            .find(|&u| !family.contains(&Subset::singleton(u)) && !family.contains(&Subset::singleton(u).complement(4)))
            .unwrap_or(0);
        let mut assignment = [0; 4];
        let mut next = 1;
        for (u, slot) in assignment.iter_mut().enumerate() {
            if u == center {
                *slot = 0;
            } else {
                *slot = next;
                next += 1;
            }
        }
        K4Template { variant: K4Variant::CentralPetal(CENTRAL_PETAL_RADIUS), assignment }
    } else {
        // cyclic orders up to symmetry: opposite disk pairs {0,2} and {1,3}
        let orders = [[0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3]];
        let opposite = |order: &[usize; 4], s: Subset| {
            let disks = Subset::from_indices(s.iter().map(|u| order[u]));
            disks == Subset::from_indices([0, 2]) || disks == Subset::from_indices([1, 3])
        };
        let assignment = orders
            .into_iter()
            .find(|o| pairs.iter().all(|&p| !opposite(o, p)))
            .unwrap_or([0, 1, 2, 3]);
        K4Template { variant: K4Variant::CyclicFour(CYCLIC_FOUR_SIDE), assignment }
    }
}

/// Realizes `K_{4,m}` for `m ≤ 6` with one of the two four-disk templates.
pub fn realize_k4m(g: &DichotomousGraph) -> Result<Embedding, ConstructError> {
    let (u, w) = sides_with(g, 4).ok_or(ConstructError::NotCompleteBipartite(4))?;
    if w.len() > 6 {
        return Err(ConstructError::NotApplicable("K_{4,m} templates need m <= 6"));
    }
    let subsets: Vec<Subset> = w.iter().map(|&x| subset_of(g, &u, x)).collect();
    let template = choose_k4_template(&subsets);
    let family = template.variant.family();
    let summary = family.summary()?;
    let emb = place(g, &u, &w, &family, &summary, &template.assignment)?;
    verified_unit_threshold(g, emb, "k4m")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::counterexamples::{counterexample, Counterexample};
    use crate::graph::generate::complete_bipartite;

    #[test]
    fn k3m_with_all_eight_subsets() {
        let subsets: Vec<Subset> = (0..8).map(Subset).collect();
        let g = complete_bipartite(3, &subsets);
        let emb = realize_k3m(&g).unwrap();
        assert!(crate::verify(&g, &emb).unwrap().valid);
        assert_eq!(k3m_template().summary().unwrap().labels.len(), 8);
    }

    #[test]
    fn k3m_single_vertex_cases() {
        for s in [Subset::EMPTY, Subset::full(3)] {
            let g = complete_bipartite(3, &[s]);
            assert!(crate::verify(&g, &realize_k3m(&g).unwrap()).unwrap().valid);
        }
    }

    #[test]
    fn templates_miss_exactly_the_declared_subsets() {
        for v in [K4Variant::CentralPetal(CENTRAL_PETAL_RADIUS), K4Variant::CyclicFour(CYCLIC_FOUR_SIDE)] {
            let labels = v.family().summary().unwrap().labels;
            let missing: Vec<Subset> = (0..16).map(Subset).filter(|s| !labels.contains(s)).collect();
            assert_eq!(missing, v.declared_missing().to_vec(), "{v:?}");
        }
    }

    #[test]
    fn case_split_examples() {
        let triples_and_two_pairs: Vec<Subset> = (0..4)
            .map(|i| Subset::singleton(i).complement(4))
            .chain([Subset::from_indices([0, 3]), Subset::from_indices([1, 3])])
            .collect();
        let t = choose_k4_template(&triples_and_two_pairs);
        assert!(matches!(t.variant, K4Variant::CyclicFour(_)));
        let g = complete_bipartite(4, &triples_and_two_pairs);
        assert!(crate::verify(&g, &realize_k4m(&g).unwrap()).unwrap().valid);

        let three_pairs = [
            Subset::from_indices([0, 1]),
            Subset::from_indices([1, 2]),
            Subset::from_indices([2, 3]),
            Subset::singleton(0),
        ];
        let t = choose_k4_template(&three_pairs);
        assert!(matches!(t.variant, K4Variant::CentralPetal(_)));
        let center = t.assignment.iter().position(|&d| d == 0).unwrap();
        assert!(center == 1 || center == 2);
        let g = complete_bipartite(4, &three_pairs);
        assert!(crate::verify(&g, &realize_k4m(&g).unwrap()).unwrap().valid);
    }

    #[test]
    fn k47_is_out_of_reach() {
        let g = counterexample(Counterexample::K47).unwrap();
        assert_eq!(realize_k4m(&g), Err(ConstructError::NotApplicable("K_{4,m} templates need m <= 6")));
    }
}
