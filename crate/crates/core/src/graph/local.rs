use std::collections::HashMap;

use super::Graph;
use crate::error::{Error, Result};
use crate::perm::{Permutation, PermutationGroup};

/// The permutation group induced by a vertex stabilizer on the vertex's neighborhood.
///
/// Local points are indices into `domain`, so the group acts on `0..d`.
#[derive(Debug, Clone)]
pub struct LocalAction {
    pub base_vertex: usize,
    /// The neighborhood `Γ(v)`, sorted.
    pub domain: Vec<usize>,
    pub group: PermutationGroup,
    lifts: HashMap<Permutation, Permutation>,
    kernel_order: usize,
}

impl LocalAction {
    pub fn degree(&self) -> usize {
        self.domain.len()
    }

    /// One element of the ambient group inducing `local`.
    pub fn lift(&self, local: &Permutation) -> Option<&Permutation> {
        self.lifts.get(local)
    }

    /// Order of the subgroup of `G_v` fixing `Γ(v)` pointwise.
    pub fn kernel_order(&self) -> usize {
        self.kernel_order
    }

    /// Local index of a graph vertex in the neighborhood.
    pub fn local_index(&self, vertex: usize) -> Option<usize> {
        self.domain.binary_search(&vertex).ok()
    }
}

/// Restricts the stabilizer of `v` to the neighborhood of `v`.
pub fn local_group(group: &PermutationGroup, graph: &Graph, v: usize) -> Result<LocalAction> {
    if group.degree() != graph.vertex_count() {
        return Err(Error::DegreeMismatch {
            left: graph.vertex_count(),
            right: group.degree(),
        });
    }
    if !group.generators().iter().all(|g| graph.is_automorphism(g)) {
        return Err(Error::NotAutomorphisms);
    }
    let domain = graph.neighbors(v).to_vec();
    let position: HashMap<usize, usize> = domain.iter().enumerate().map(|(i, &w)| (w, i)).collect();
    let mut lifts: HashMap<Permutation, Permutation> = HashMap::new();
    let mut order = Vec::new();
    let mut kernel_order = 0;
    for g in group.stabilizer_elements(&[v]) {
        let images = domain.iter().map(|&w| position[&g.apply(w)]).collect();
        let local = Permutation::from_images(images).expect("stabilizer permutes the neighborhood");
        if local.is_identity() {
            kernel_order += 1;
        }
        if let std::collections::hash_map::Entry::Vacant(slot) = lifts.entry(local) {
            order.push(slot.key().clone());
            slot.insert(g.clone());
        }
    }
    Ok(LocalAction {
        base_vertex: v,
        group: PermutationGroup::from_closed_elements(domain.len(), order),
        domain,
        lifts,
        kernel_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{automorphism_group, named_graph};
    use crate::perm::DEFAULT_GROUP_CAP;

    fn local_of(spec: &str, v: usize) -> (PermutationGroup, LocalAction) {
        let g = named_graph(spec).unwrap();
        let aut = automorphism_group(&g, DEFAULT_GROUP_CAP).unwrap();
        let local = local_group(&aut, &g, v).unwrap();
        (aut, local)
    }

    #[test]
    fn hypercube_local_group_is_s3() {
        for v in [0, 5] {
            let (_, local) = local_of("hypercube:3", v);
            assert_eq!(local.group.order(), 6);
            assert!(local.group.is_transitive(&[0, 1, 2]).unwrap());
        }
    }

    #[test]
    fn complete_graph_local_group_is_full_symmetric() {
        let (_, local) = local_of("complete:5", 0);
        assert_eq!(local.degree(), 4);
        assert_eq!(local.group.order(), 24);
    }

    #[test]
    fn trivial_group_gives_trivial_local_group() {
        let g = named_graph("petersen").unwrap();
        let local = local_group(&PermutationGroup::trivial(10), &g, 3).unwrap();
        assert_eq!(local.group.order(), 1);
    }

    #[test]
    fn lifts_induce_their_local_elements_and_kernel_counts_match() {
        for spec in ["hypercube:3", "petersen", "blowup:2:cycle:4", "hypercube:4"] {
            let (aut, local) = local_of(spec, 0);
            for l in local.group.elements() {
                let lift = local.lift(l).unwrap();
                for (i, &w) in local.domain.iter().enumerate() {
                    assert_eq!(lift.apply(w), local.domain[l.apply(i)]);
                }
            }
            assert_eq!(
                local.group.order() * local.kernel_order(),
                aut.stabilizer_order(&[0]),
                "{spec}"
            );
        }
    }

    #[test]
    fn non_automorphisms_are_rejected() {
        let g = named_graph("cycle:6").unwrap();
        let bad = PermutationGroup::close(6, vec![Permutation::transposition(6, 0, 1)], 10).unwrap();
        assert_eq!(local_group(&bad, &g, 0).unwrap_err(), Error::NotAutomorphisms);
    }
}
