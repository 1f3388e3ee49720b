//! Lexicographic blow-ups `Γ[K̄_m]` in which no consistent walk has a trivial stabilizer.
//!
//! Each consistent cycle `α` of the base graph lifts to `m` consistent cycles
//! of the blow-up: the `j`-th one runs around `α` `j` times, using fiber `c`
//! on lap `c`, and closes back at fiber 0. Its shunt moves along `α` inside a
//! fiber and rotates the first `j` fibers when it wraps around.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    automorphism_group, is_vertex_transitive, lex_blowup, twin_vertices, wreath_generators, Blowup, Graph,
};
use crate::perm::{Permutation, PermutationGroup};
use crate::walks::{consistent_cycle_orbits, shunts, CycleCensus, Walk};

/// One lifted cycle `β_{i,j}` with its shunt.
#[derive(Debug, Clone, Serialize)]
pub struct LiftedCycle {
    /// Index of the base orbit, in census order.
    pub i: usize,
    /// Number of laps, `1..=m`.
    pub j: usize,
    pub cycle: Walk,
    pub shunt: Permutation,
    /// Swap of `(w, 0)` and `(w, 1)` for a base vertex `w` off the base cycle, if there is one.
    pub fiber_swap: Option<Permutation>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BlowupCycleFamily {
    pub m: usize,
    /// Census representatives `α_1, .., α_d` of the base graph.
    pub base_representatives: Vec<Walk>,
    /// Shunts `g_i` of the base representatives.
    pub base_shunts: Vec<Permutation>,
    /// `β_{i,j}` ordered by `i`, then `j`.
    pub cycles: Vec<LiftedCycle>,
    #[serde(skip)]
    pub blowup: Blowup,
}

/// Builds and checks the `d·m` lifted cycles of `Γ[K̄_m]`.
///
/// Every shunt is verified to be an automorphism of the blow-up that shunts
/// its cycle, and every fiber swap to be an automorphism fixing its cycle.
pub fn blowup_cycle_family(graph: &Graph, group: &PermutationGroup, m: usize) -> Result<BlowupCycleFamily> {
    if m < 2 {
        return Err(Error::BadParameters(format!("blow-up factor {m} must be at least 2")));
    }
    if !graph.is_connected() {
        return Err(Error::NotConnected);
    }
    if !is_vertex_transitive(group, graph) {
        return Err(Error::BaseNotVertexTransitive);
    }
    let census = consistent_cycle_orbits(group, graph)?;
    let blowup = lex_blowup(graph, m)?;
    let mut base_representatives = Vec::new();
    let mut base_shunts = Vec::new();
    let mut cycles = Vec::new();
    for (i, record) in census.table.iter().enumerate() {
        let alpha = record.representative.clone();
        let g = shunts(group, &alpha).into_iter().next().ok_or(Error::NotConsistent)?;
        for j in 1..=m {
            let lifted = lift_cycle(&blowup, &alpha, &g, i, j)?;
            cycles.push(lifted);
        }
        base_representatives.push(alpha);
        base_shunts.push(g);
    }
    Ok(BlowupCycleFamily {
        m,
        base_representatives,
        base_shunts,
        cycles,
        blowup,
    })
}

fn lift_cycle(blowup: &Blowup, alpha: &Walk, g: &Permutation, i: usize, j: usize) -> Result<LiftedCycle> {
    let head = alpha.head();
    let len = head.len();
    let mut vertices = Vec::with_capacity(j * len + 1);
    for lap in 0..j {
        vertices.extend(head.iter().map(|&v| blowup.point(v, lap)));
    }
    vertices.push(blowup.point(head[0], 0));
    let cycle = Walk::new(&blowup.graph, vertices)?;
    if !cycle.is_cycle() || cycle.len() != j * alpha.len() {
        return Err(Error::Invariant(format!(
            "lifted walk {cycle:?} is not a cycle of length {}",
            j * alpha.len()
        )));
    }

    // (w, c) -> (w^g, c), except over the last vertex of the lap, where the
    // first j fibers rotate
    let wrap = head[len - 1];
    let total = blowup.graph.vertex_count();
    let images = (0..total)
        .map(|p| {
            let (w, c) = blowup.fiber(p);
            let c = if w == wrap && c < j { (c + 1) % j } else { c };
            blowup.point(g.apply(w), c)
        })
        .collect();
    let shunt = Permutation::from_images(images)?;
    if !blowup.graph.is_automorphism(&shunt) || !shunt.maps_tuple(cycle.head(), cycle.tail()) {
        return Err(Error::Invariant(format!("constructed shunt does not shunt {cycle:?}")));
    }

    let fiber_swap = (0..blowup.base_vertices)
        .find(|w| !head.contains(w))
        .map(|w| Permutation::transposition(total, blowup.point(w, 0), blowup.point(w, 1)));
    if let Some(swap) = &fiber_swap {
        if !blowup.graph.is_automorphism(swap) || !swap.fixes_all(cycle.vertices()) {
            return Err(Error::Invariant(format!("fiber swap does not fix {cycle:?}")));
        }
    }
    Ok(LiftedCycle {
        i,
        j,
        cycle,
        shunt,
        fiber_swap,
    })
}

impl BlowupCycleFamily {
    /// Census orbit of each lifted cycle, in family order.
    pub fn orbit_indices(&self, census: &CycleCensus) -> Vec<Option<usize>> {
        self.cycles.iter().map(|c| census.orbit_of(&c.cycle)).collect()
    }

    /// Whether the lifted cycles hit every census orbit exactly once.
    pub fn covers_all_orbits(&self, census: &CycleCensus) -> bool {
        let mut hit: Vec<usize> = match self.orbit_indices(census).into_iter().collect::<Option<Vec<_>>>() {
            Some(h) => h,
            None => return false,
        };
        hit.sort_unstable();
        hit.dedup();
        hit.len() == self.cycles.len() && hit.len() == census.table.len()
    }
}

/// Outcome of checking every consistent-cycle orbit for a trivial stabilizer.
#[derive(Debug, Clone, Serialize)]
pub struct TrivialStabilizerCheck {
    /// True when no consistent cycle, hence no consistent walk, has trivial stabilizer.
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offending: Option<Walk>,
    /// Stabilizer order per census orbit.
    pub stabilizer_orders: Vec<usize>,
}

/// Checks that every consistent cycle has a nontrivial stabilizer.
///
/// A consistent walk and any of its shunts induce a consistent cycle through
/// the walk's vertices, whose stabilizer lies in the walk's, so cycles settle
/// the question for all consistent walks.
pub fn verify_no_trivial_stabilizer(group: &PermutationGroup, graph: &Graph) -> Result<TrivialStabilizerCheck> {
    let census = consistent_cycle_orbits(group, graph)?;
    Ok(check_census(&census))
}

pub fn check_census(census: &CycleCensus) -> TrivialStabilizerCheck {
    let stabilizer_orders: Vec<usize> = census.table.iter().map(|r| r.stabilizer_order).collect();
    let offending = census
        .table
        .iter()
        .find(|r| r.stabilizer_order == 1)
        .map(|r| r.representative.clone());
    TrivialStabilizerCheck {
        holds: offending.is_none(),
        offending,
        stabilizer_orders,
    }
}

/// Whether a base graph meets the hypotheses of the blow-up construction.
#[derive(Debug, Clone, Serialize)]
pub struct HypothesisReport {
    pub connected: bool,
    pub vertex_transitive: bool,
    pub twin_free: bool,
    /// A consistent cycle through every vertex; its shunt would generate a cyclic regular subgroup.
    pub hamiltonian_consistent_cycle: Option<Walk>,
    pub satisfied: bool,
}

/// Checks connectivity, vertex-transitivity, absence of twins and absence of a
/// consistent cycle through all vertices, all under the full automorphism group.
pub fn check_blowup_hypotheses(graph: &Graph, cap: usize) -> Result<HypothesisReport> {
    let aut = automorphism_group(graph, cap)?;
    let connected = graph.is_connected();
    let vertex_transitive = is_vertex_transitive(&aut, graph);
    let twin_free = twin_vertices(graph).is_empty();
    let hamiltonian_consistent_cycle = if vertex_transitive {
        let census = consistent_cycle_orbits(&aut, graph)?;
        census
            .table
            .iter()
            .find(|r| r.length == graph.vertex_count())
            .map(|r| r.representative.clone())
    } else {
        None
    };
    Ok(HypothesisReport {
        connected,
        vertex_transitive,
        twin_free,
        satisfied: connected && vertex_transitive && twin_free && hamiltonian_consistent_cycle.is_none(),
        hamiltonian_consistent_cycle,
    })
}

/// The wreath subgroup `S_m ≀ G` of the blow-up's automorphism group.
pub fn wreath_group(blowup: &Blowup, base_group: &PermutationGroup, cap: usize) -> Result<PermutationGroup> {
    let gens = wreath_generators(blowup, base_group);
    if !gens.iter().all(|g| blowup.graph.is_automorphism(g)) {
        return Err(Error::NotAutomorphisms);
    }
    PermutationGroup::close(blowup.graph.vertex_count(), gens, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walks::is_consistent;
    use crate::walks::tests::aut;

    #[test]
    fn hypercube_family_shape() {
        let (q3, a) = aut("hypercube:3");
        let family = blowup_cycle_family(&q3, &a, 2).unwrap();
        assert_eq!(family.cycles.len(), 6);
        for c in &family.cycles {
            let alpha = &family.base_representatives[c.i];
            assert_eq!(c.cycle.len(), c.j * alpha.len());
            if c.j == 1 {
                let expected: Vec<usize> = alpha.vertices().iter().map(|&v| family.blowup.point(v, 0)).collect();
                assert_eq!(c.cycle.vertices(), &expected[..]);
            }
            assert!(c.fiber_swap.is_some());
        }
        let j2 = &family.cycles[1];
        let fibers: Vec<usize> = j2.cycle.vertices().iter().map(|&p| family.blowup.fiber(p).1).collect();
        let half = family.base_representatives[0].len();
        assert!(fibers[..half].iter().all(|&c| c == 0));
        assert!(fibers[half..2 * half].iter().all(|&c| c == 1));
        assert_eq!(*fibers.last().unwrap(), 0);
    }

    #[test]
    fn lifted_cycles_are_consistent_under_the_wreath_group() {
        for (spec, m) in [("hypercube:3", 2), ("cycle:6", 2), ("cycle:6", 3), ("complete:4", 3)] {
            let (g, a) = aut(spec);
            let family = blowup_cycle_family(&g, &a, m).unwrap();
            let wreath = wreath_group(&family.blowup, &a, 2_000_000).unwrap();
            for c in &family.cycles {
                assert!(wreath.contains(&c.shunt), "{spec} m={m}");
                assert!(is_consistent(&wreath, &c.cycle).is_some());
            }
        }
    }

    #[test]
    fn hamiltonian_base_has_no_fiber_swap() {
        let (c6, a) = aut("cycle:6");
        let family = blowup_cycle_family(&c6, &a, 2).unwrap();
        let hexagon_lifts: Vec<&LiftedCycle> = family.cycles.iter().filter(|c| c.i == 1).collect();
        assert!(hexagon_lifts.iter().all(|c| c.fiber_swap.is_none()));
    }

    #[test]
    fn family_rejects_bad_input() {
        let (q3, a) = aut("hypercube:3");
        assert!(matches!(
            blowup_cycle_family(&q3, &a, 1).unwrap_err(),
            Error::BadParameters(_)
        ));
        let stab = a.pointwise_stabilizer(&[0]);
        assert_eq!(
            blowup_cycle_family(&q3, &stab, 2).unwrap_err(),
            Error::BaseNotVertexTransitive
        );
    }

    #[test]
    fn blown_up_hypercube_has_no_trivial_stabilizer() {
        let (q3, a) = aut("hypercube:3");
        let family = blowup_cycle_family(&q3, &a, 2).unwrap();
        let full = automorphism_group(&family.blowup.graph, 2_000_000).unwrap();
        assert_eq!(full.order(), 12288);
        let census = consistent_cycle_orbits(&full, &family.blowup.graph).unwrap();
        let check = check_census(&census);
        assert!(check.holds);
        assert!(check.stabilizer_orders.iter().all(|&o| o >= 2));
        assert!(family.covers_all_orbits(&census));
    }

    #[test]
    fn graphs_with_trivial_stabilizer_cycles() {
        for spec in ["petersen", "complete:5"] {
            let (g, a) = aut(spec);
            let check = verify_no_trivial_stabilizer(&a, &g).unwrap();
            assert!(!check.holds, "{spec}");
            let offending = check.offending.unwrap();
            assert_eq!(a.stabilizer_order(offending.vertices()), 1);
        }
    }

    #[test]
    fn hypotheses() {
        let q3 = crate::graph::named_graph("hypercube:3").unwrap();
        let report = check_blowup_hypotheses(&q3, 1000).unwrap();
        assert!(report.satisfied && report.twin_free);
        for spec in ["cycle:6", "complete:4"] {
            let g = crate::graph::named_graph(spec).unwrap();
            let report = check_blowup_hypotheses(&g, 1000).unwrap();
            assert!(!report.satisfied, "{spec}");
            assert!(report.hamiltonian_consistent_cycle.is_some(), "{spec}");
        }
        let k44 = crate::graph::named_graph("blowup:2:cycle:4").unwrap();
        assert!(!check_blowup_hypotheses(&k44, 2_000_000).unwrap().twin_free);
    }
}
