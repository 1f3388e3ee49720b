//! Generating a vertex-transitive group from one shunt per orbit of consistent cycles.
//!
//! Representatives are chosen so that any two of them share as long an
//! initial segment as any two members of their orbits do. One shunt per
//! representative, together with the stabilizer of any representative,
//! then generates the whole group.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_vertex_transitive, Graph};
use crate::perm::{GeneratingSearch, Permutation, PermutationGroup};
use crate::walks::{consistent_cycle_orbits, shunts, CycleCensus, Walk};

/// Groups above this order get only the generator-count bound, not an exact `δ`.
pub const EXACT_DELTA_MAX_ORDER: usize = 5_000;

/// Caps the exhaustive representative search that backs up the greedy choice.
pub const FALLBACK_TUPLE_CAP: usize = 100_000;

/// Overlap `m(a, b)`: `-1` if the first vertices differ, else the last index through which the walks agree.
///
/// ```
/// use conwalk::generation::overlap;
/// use conwalk::{named_graph, Walk};
/// let k5 = named_graph("complete:5").unwrap();
/// let a = Walk::new(&k5, vec![0, 1, 2, 3]).unwrap();
/// let b = Walk::new(&k5, vec![0, 1, 4]).unwrap();
/// assert_eq!(overlap(&a, &b), 1);
/// ```
pub fn overlap(a: &Walk, b: &Walk) -> i64 {
    let agree = a
        .vertices()
        .iter()
        .zip(b.vertices())
        .take_while(|(x, y)| x == y)
        .count();
    agree as i64 - 1
}

/// `m(a^G, b^G)`, computed as the largest `m(a, b^g)` over all `g ∈ G`.
pub fn orbit_overlap(group: &PermutationGroup, a: &Walk, b: &Walk) -> i64 {
    group
        .elements()
        .iter()
        .map(|g| overlap(a, &b.image(g)))
        .max()
        .unwrap_or(-1)
}

/// Pairwise walk overlaps of the representatives next to their orbit overlaps.
#[derive(Debug, Clone, Serialize)]
pub struct OverlapMatrix {
    pub representatives: Vec<Walk>,
    pub walk_overlaps: Vec<Vec<i64>>,
    pub orbit_overlaps: Vec<Vec<i64>>,
}

impl OverlapMatrix {
    /// Builds both matrices, the orbit one by a sweep over the whole group.
    pub fn compute(group: &PermutationGroup, representatives: Vec<Walk>) -> OverlapMatrix {
        let d = representatives.len();
        let mut walk_overlaps = vec![vec![0; d]; d];
        let mut orbit_overlaps = vec![vec![0; d]; d];
        for i in 0..d {
            for j in 0..d {
                walk_overlaps[i][j] = overlap(&representatives[i], &representatives[j]);
                orbit_overlaps[i][j] = if i == j {
                    representatives[i].len() as i64
                } else {
                    orbit_overlap(group, &representatives[i], &representatives[j])
                };
            }
        }
        OverlapMatrix {
            representatives,
            walk_overlaps,
            orbit_overlaps,
        }
    }

    /// Every pair of representatives realizes the overlap of its orbits.
    pub fn is_overlap_maximal(&self) -> bool {
        self.walk_overlaps == self.orbit_overlaps
    }
}

/// One representative per census orbit, in census order.
#[derive(Debug, Clone, Serialize)]
pub struct Representatives {
    pub representatives: Vec<Walk>,
    pub matrix: OverlapMatrix,
    /// Whether the exhaustive search had to replace the greedy choice.
    pub fallback_used: bool,
}

/// Overlap-maximal representatives of the consistent-cycle orbits.
///
/// The choice is greedy in the manner of Prim's algorithm: starting from the
/// first orbit, repeatedly attach the unassigned orbit with the largest
/// overlap to an assigned representative, using a member that realizes it.
/// Orbit overlap satisfies `m(A, C) >= min(m(A, B), m(B, C))`, and with that
/// the greedy choice realizes every pairwise orbit overlap. The result is
/// nonetheless checked against a full group sweep, with an exhaustive search
/// over cycles starting at the same vertex as a fallback.
pub fn overlap_maximal_representatives(group: &PermutationGroup, graph: &Graph) -> Result<Representatives> {
    if !is_vertex_transitive(group, graph) {
        return Err(Error::NotVertexTransitive);
    }
    let census = consistent_cycle_orbits(group, graph)?;
    representatives_from_census(group, &census)
}

pub fn representatives_from_census(group: &PermutationGroup, census: &CycleCensus) -> Result<Representatives> {
    let members: Vec<Vec<&Walk>> = (0..census.table.len()).map(|o| census.members(o).collect()).collect();
    let representatives = greedy_representatives(&members);
    let matrix = OverlapMatrix::compute(group, representatives.clone());
    if matrix.is_overlap_maximal() {
        return Ok(Representatives {
            representatives,
            matrix,
            fallback_used: false,
        });
    }
    let start = representatives[0].first();
    let representatives = exhaustive_representatives(&members, start, &matrix.orbit_overlaps)?;
    let matrix = OverlapMatrix::compute(group, representatives.clone());
    if !matrix.is_overlap_maximal() {
        return Err(Error::SelectionFailed);
    }
    Ok(Representatives {
        representatives,
        matrix,
        fallback_used: true,
    })
}

fn greedy_representatives(members: &[Vec<&Walk>]) -> Vec<Walk> {
    let d = members.len();
    let mut chosen: Vec<Option<Walk>> = vec![None; d];
    chosen[0] = Some(members[0][0].clone());
    // best[b] = (overlap, member index) against any assigned representative
    let mut best: Vec<Option<(i64, usize)>> = vec![None; d];
    let mut newest = 0;
    for _ in 1..d {
        let anchor = chosen[newest].as_ref().expect("just assigned");
        for b in 0..d {
            if chosen[b].is_some() {
                continue;
            }
            let mut top: Option<(i64, usize)> = None;
            for (k, w) in members[b].iter().enumerate() {
                let m = overlap(anchor, w);
                if top.is_none_or(|(t, _)| m > t) {
                    top = Some((m, k));
                }
            }
            if let Some(t) = top {
                if best[b].is_none_or(|(old, _)| t.0 > old) {
                    best[b] = Some(t);
                }
            }
        }
        let next = (0..d)
            .filter(|&b| chosen[b].is_none())
            .max_by(|&x, &y| best[x].map(|t| t.0).cmp(&best[y].map(|t| t.0)).then(y.cmp(&x)))
            .expect("an orbit is left");
        let (_, k) = best[next].expect("every orbit has members");
        chosen[next] = Some(members[next][k].clone());
        newest = next;
    }
    chosen.into_iter().map(|w| w.expect("all assigned")).collect()
}

fn exhaustive_representatives(members: &[Vec<&Walk>], start: usize, target: &[Vec<i64>]) -> Result<Vec<Walk>> {
    let pools: Vec<Vec<&Walk>> = members
        .iter()
        .map(|m| m.iter().copied().filter(|w| w.first() == start).collect())
        .collect();
    if pools.iter().any(Vec::is_empty) {
        return Err(Error::SelectionFailed);
    }
    let d = pools.len();
    let mut pick = vec![0usize; d];
    for _ in 0..FALLBACK_TUPLE_CAP {
        let ok =
            (0..d).all(|i| (0..d).all(|j| i == j || overlap(pools[i][pick[i]], pools[j][pick[j]]) == target[i][j]));
        if ok {
            return Ok((0..d).map(|i| pools[i][pick[i]].clone()).collect());
        }
        // odometer step
        let mut pos = d;
        loop {
            if pos == 0 {
                return Err(Error::SelectionFailed);
            }
            pos -= 1;
            pick[pos] += 1;
            if pick[pos] < pools[pos].len() {
                break;
            }
            pick[pos] = 0;
        }
    }
    Err(Error::SelectionFailed)
}

/// The lexicographically smallest shunt of each representative.
pub fn shunt_generating_set(group: &PermutationGroup, representatives: &[Walk]) -> Result<Vec<Permutation>> {
    representatives
        .iter()
        .map(|r| shunts(group, r).into_iter().next().ok_or(Error::NotConsistent))
        .collect()
}

/// Whether `S` together with generators of `G_τ` generates `group`.
pub fn generates_with_stabilizer(group: &PermutationGroup, shunt_set: &[Permutation], tau: &Walk) -> Result<bool> {
    let mut gens = shunt_set.to_vec();
    gens.extend_from_slice(group.pointwise_stabilizer(tau.vertices()).generators());
    Ok(group.subgroup(gens)?.order() == group.order())
}

fn delta(group: &PermutationGroup) -> Option<usize> {
    (group.order() <= EXACT_DELTA_MAX_ORDER)
        .then(|| group.min_generating_size(GeneratingSearch::default()))
        .flatten()
}

#[derive(Debug, Clone, Serialize)]
pub struct GenerationReport {
    pub group_order: usize,
    pub representatives: Representatives,
    /// One shunt per representative, as image arrays.
    pub shunts: Vec<Permutation>,
    pub shunt_group_order: usize,
    /// `⟨S⟩ = G`.
    pub shunts_generate: bool,
    /// The representative whose stabilizer joins `S`.
    pub tau: Walk,
    pub tau_stabilizer_order: usize,
    /// `⟨S ∪ G_τ⟩ = G`; always true, or an error is raised instead.
    pub with_stabilizer_generates: bool,
    /// `δ(G_τ)` when computed exactly, else the size of a generating set found.
    pub tau_delta: usize,
    pub tau_delta_exact: bool,
    /// `d + δ(G_τ)`.
    pub delta_bound: usize,
    /// `δ(G)` for groups small enough to search.
    pub exact_delta: Option<usize>,
}

/// Builds `S`, picks `τ`, and checks that `⟨S ∪ G_τ⟩ = G`.
///
/// `τ` is a representative of smallest stabilizer order, ties going to the
/// lexicographically smallest walk. When `G_τ` is trivial, `⟨S⟩ = G` is
/// required as well.
pub fn verify_generation(group: &PermutationGroup, graph: &Graph) -> Result<GenerationReport> {
    if !graph.is_connected() {
        return Err(Error::NotConnected);
    }
    let representatives = overlap_maximal_representatives(group, graph)?;
    let reps = &representatives.representatives;
    let shunt_set = shunt_generating_set(group, reps)?;
    let tau = reps
        .iter()
        .min_by_key(|r| (group.stabilizer_order(r.vertices()), (*r).clone()))
        .expect("a connected graph has at least one orbit")
        .clone();
    let stabilizer = group.pointwise_stabilizer(tau.vertices());

    let shunt_group_order = group.subgroup(shunt_set.clone())?.order();
    let with_stabilizer_generates = generates_with_stabilizer(group, &shunt_set, &tau)?;
    if !with_stabilizer_generates {
        return Err(Error::Invariant(format!(
            "shunts and the stabilizer of {tau:?} generate a proper subgroup"
        )));
    }
    let shunts_generate = shunt_group_order == group.order();
    if stabilizer.order() == 1 && !shunts_generate {
        return Err(Error::Invariant(
            "shunts fail to generate although τ has trivial stabilizer".into(),
        ));
    }

    let exact_tau = delta(&stabilizer);
    let tau_delta = exact_tau.unwrap_or(stabilizer.generators().len());
    Ok(GenerationReport {
        group_order: group.order(),
        shunts: shunt_set,
        shunt_group_order,
        shunts_generate,
        tau_stabilizer_order: stabilizer.order(),
        tau,
        with_stabilizer_generates,
        tau_delta,
        tau_delta_exact: exact_tau.is_some(),
        delta_bound: reps.len() + tau_delta,
        exact_delta: delta(group),
        representatives,
    })
}
