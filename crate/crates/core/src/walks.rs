//! Consistent walks, their shunts and successors, and the census of consistent cycles.
//!
//! A walk `α = (v_0, .., v_n)` is consistent under `G` when some `g ∈ G`
//! (a *shunt*) maps `(v_0, .., v_{n-1})` onto `(v_1, .., v_n)`. The shunts
//! form a coset of a pointwise stabilizer, and applying them to `α` yields
//! the *successors* of `α`. Walks are rooted and directed: `(0, 1, 2, 0)`
//! and `(1, 2, 0, 1)` are different walks.

use std::collections::HashMap;
use std::fmt;

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_vertex_transitive, Graph};
use crate::perm::{Permutation, PermutationGroup};

/// A rooted, directed walk `(v_0, .., v_n)` with `n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Walk(Vec<usize>);

impl Walk {
    /// Checks that consecutive vertices are adjacent and that the walk has length at least 1.
    pub fn new(graph: &Graph, vertices: Vec<usize>) -> Result<Walk> {
        if vertices.len() < 2 {
            return Err(Error::InvalidWalk("a walk needs at least two vertices".into()));
        }
        if !graph.is_walk(&vertices) {
            return Err(Error::InvalidWalk(format!("{vertices:?} is not a walk in the graph")));
        }
        Ok(Walk(vertices))
    }

    pub(crate) fn from_vec(vertices: Vec<usize>) -> Walk {
        debug_assert!(vertices.len() >= 2);
        Walk(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// The length `n`, one less than the number of vertices.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    /// `(v_0, .., v_{n-1})`.
    pub fn head(&self) -> &[usize] {
        &self.0[..self.0.len() - 1]
    }

    /// `(v_1, .., v_n)`.
    pub fn tail(&self) -> &[usize] {
        &self.0[1..]
    }

    /// The walk without its last vertex, if that is still a walk.
    pub fn drop_last(&self) -> Option<Walk> {
        (self.len() >= 2).then(|| Walk(self.head().to_vec()))
    }

    /// `(v_0, .., v_k)`.
    pub fn prefix(&self, k: usize) -> Walk {
        assert!(k >= 1 && k <= self.len());
        Walk(self.0[..=k].to_vec())
    }

    pub fn extended(&self, v: usize) -> Walk {
        let mut out = self.0.clone();
        out.push(v);
        Walk(out)
    }

    pub fn image(&self, g: &Permutation) -> Walk {
        Walk(g.apply_tuple(&self.0))
    }

    pub fn is_closed(&self) -> bool {
        self.first() == self.last()
    }

    /// A closed walk whose vertices before the last are distinct.
    pub fn is_cycle(&self) -> bool {
        if !self.is_closed() {
            return false;
        }
        let mut head = self.head().to_vec();
        head.sort_unstable();
        head.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Debug for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A walk together with one of its shunts.
#[derive(Debug, Clone, Serialize)]
pub struct ConsistencyWitness {
    pub walk: Walk,
    pub shunt: Permutation,
    /// Order of the group the shunt was drawn from.
    pub group_order: usize,
}

impl ConsistencyWitness {
    pub fn is_valid(&self) -> bool {
        self.shunt.maps_tuple(self.walk.head(), self.walk.tail())
    }
}

/// All shunts of `walk` in `group`, sorted by image tuple.
pub fn shunts(group: &PermutationGroup, walk: &Walk) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = group.transporters(walk.head(), walk.tail()).cloned().collect();
    out.sort_unstable();
    out
}

/// A witness with the lexicographically smallest shunt, or `None` when the walk is not consistent.
pub fn is_consistent(group: &PermutationGroup, walk: &Walk) -> Option<ConsistencyWitness> {
    group
        .transporters(walk.head(), walk.tail())
        .min()
        .map(|g| ConsistencyWitness {
            walk: walk.clone(),
            shunt: g.clone(),
            group_order: group.order(),
        })
}

/// Last vertices `v_n^g` over all shunts `g`, sorted and distinct.
fn successor_ends(group: &PermutationGroup, walk: &Walk) -> Vec<usize> {
    let mut ends: Vec<usize> = group
        .transporters(walk.head(), walk.tail())
        .map(|g| g.apply(walk.last()))
        .collect();
    ends.sort_unstable();
    ends.dedup();
    ends
}

/// The successors `(v_1, .., v_n, v_n^g)` of a consistent walk, in lexicographic order.
pub fn successors(group: &PermutationGroup, walk: &Walk) -> Result<Vec<Walk>> {
    let ends = successor_ends(group, walk);
    if ends.is_empty() {
        return Err(Error::NotConsistent);
    }
    Ok(ends
        .into_iter()
        .map(|w| {
            let mut v = walk.tail().to_vec();
            v.push(w);
            Walk(v)
        })
        .collect())
}

/// `|Succ(α)|`, cross-checked against `|G_α̂| = |G_α|·|Succ(α)|`.
pub fn successor_count(group: &PermutationGroup, walk: &Walk) -> Result<usize> {
    let count = successor_ends(group, walk).len();
    if count == 0 {
        return Err(Error::NotConsistent);
    }
    let head = group.stabilizer_order(walk.head());
    let full = group.stabilizer_order(walk.vertices());
    if head != full * count {
        return Err(Error::Invariant(format!(
            "stabilizer orders {head} != {full} * {count} for {walk:?}"
        )));
    }
    Ok(count)
}

/// The consistent cycle induced by a walk and one of its shunts.
///
/// Iterates the shunt from `v_0` until the first repeated vertex, which is
/// necessarily `v_0` itself.
pub fn induced_cycle(witness: &ConsistencyWitness) -> Walk {
    debug_assert!(witness.is_valid());
    let start = witness.walk.first();
    orbit_cycle(&witness.shunt, start)
}

/// `(u, u^g, u^{g²}, .., u)`.
fn orbit_cycle(g: &Permutation, u: usize) -> Walk {
    let mut out = vec![u];
    let mut x = g.apply(u);
    while x != u {
        out.push(x);
        x = g.apply(x);
    }
    out.push(u);
    Walk(out)
}

/// One orbit of consistent cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleOrbit {
    /// Lexicographically smallest cycle of the orbit.
    pub representative: Walk,
    pub length: usize,
    pub orbit_size: usize,
    pub shunt_count: usize,
    pub stabilizer_order: usize,
    pub trivial: bool,
}

/// Orbit records, sorted by cycle length and then representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleOrbitTable(pub Vec<CycleOrbit>);

impl CycleOrbitTable {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, CycleOrbit> {
        self.0.iter()
    }
}

/// All consistent cycles of a graph, partitioned into orbits.
#[derive(Debug, Clone)]
pub struct CycleCensus {
    pub table: CycleOrbitTable,
    pub vertex_transitive: bool,
    cycles: Vec<Walk>,
    orbit_index: Vec<usize>,
    lookup: HashMap<Walk, usize>,
}

impl CycleCensus {
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// Index into `table` of the orbit containing `cycle`, if it is a consistent cycle.
    pub fn orbit_of(&self, cycle: &Walk) -> Option<usize> {
        self.lookup.get(cycle).map(|&i| self.orbit_index[i])
    }

    /// Members of orbit `orbit`, in lexicographic order.
    pub fn members(&self, orbit: usize) -> impl Iterator<Item = &Walk> + '_ {
        self.cycles
            .iter()
            .zip(&self.orbit_index)
            .filter(move |(_, &o)| o == orbit)
            .map(|(c, _)| c)
    }

    pub fn cycles(&self) -> &[Walk] {
        &self.cycles
    }
}

/// Enumerates every consistent cycle and splits them into `G`-orbits.
///
/// Every consistent cycle has a shunt `g`, and is then the `⟨g⟩`-orbit of its
/// first vertex; sweeping all pairs `(g, u)` with `u ~ u^g` therefore finds
/// them all. For a vertex-transitive group on a `d`-valent graph the table
/// has exactly `d` records, and a different count is reported as an error.
pub fn consistent_cycle_orbits(group: &PermutationGroup, graph: &Graph) -> Result<CycleCensus> {
    let n = graph.vertex_count();
    let mut cycles: Vec<Walk> = group
        .elements()
        .par_iter()
        .flat_map_iter(|g| {
            (0..n)
                .filter(move |&u| graph.is_adjacent(u, g.apply(u)))
                .map(move |u| orbit_cycle(g, u))
        })
        .collect();
    cycles.par_sort_unstable();
    cycles.dedup();

    let lookup: HashMap<Walk, usize> = cycles.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let mut classes = UnionFind::<usize>::new(cycles.len());
    for (i, c) in cycles.iter().enumerate() {
        for s in group.generators() {
            classes.union(i, lookup[&c.image(s)]);
        }
    }
    let labels = classes.into_labeling();

    // cycles are sorted, so the first member seen of each class is its smallest
    let mut class_to_orbit: HashMap<usize, usize> = HashMap::new();
    let mut firsts = Vec::new();
    let mut sizes = Vec::new();
    for (i, &label) in labels.iter().enumerate() {
        let next = class_to_orbit.len();
        let orbit = *class_to_orbit.entry(label).or_insert_with(|| {
            firsts.push(i);
            sizes.push(0);
            next
        });
        sizes[orbit] += 1;
    }

    let mut records: Vec<(CycleOrbit, usize)> = firsts
        .iter()
        .zip(&sizes)
        .enumerate()
        .map(|(orbit, (&first, &size))| {
            let rep = cycles[first].clone();
            let record = CycleOrbit {
                length: rep.len(),
                orbit_size: size,
                shunt_count: group.transporters(rep.head(), rep.tail()).count(),
                stabilizer_order: group.stabilizer_order(rep.head()),
                trivial: rep.len() == 2,
                representative: rep,
            };
            (record, orbit)
        })
        .collect();
    records.sort_by(|a, b| (a.0.length, &a.0.representative).cmp(&(b.0.length, &b.0.representative)));
    let mut renumber = vec![0; records.len()];
    for (new, (_, old)) in records.iter().enumerate() {
        renumber[*old] = new;
    }
    let orbit_index = labels.iter().map(|l| renumber[class_to_orbit[l]]).collect();
    let table = CycleOrbitTable(records.into_iter().map(|(r, _)| r).collect());

    for r in table.iter() {
        if r.orbit_size * r.stabilizer_order != group.order() {
            return Err(Error::Invariant(format!(
                "orbit of {:?}: {} * {} != {}",
                r.representative,
                r.orbit_size,
                r.stabilizer_order,
                group.order()
            )));
        }
    }
    let vertex_transitive = is_vertex_transitive(group, graph);
    if vertex_transitive {
        let d = graph.valence().expect("vertex-transitive graphs are regular");
        if table.len() != d {
            return Err(Error::Invariant(format!(
                "{} orbits of consistent cycles on a {d}-valent graph",
                table.len()
            )));
        }
    }
    Ok(CycleCensus {
        table,
        vertex_transitive,
        cycles,
        orbit_index,
        lookup,
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::graph::{automorphism_group, named_graph};
    use crate::perm::DEFAULT_GROUP_CAP;
    use proptest::prelude::*;
    use std::collections::{BTreeSet, HashSet};

    pub(crate) fn aut(spec: &str) -> (Graph, PermutationGroup) {
        let g = named_graph(spec).unwrap();
        let a = automorphism_group(&g, DEFAULT_GROUP_CAP).unwrap();
        (g, a)
    }

    pub(crate) fn rotations6() -> PermutationGroup {
        let rot = Permutation::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).unwrap();
        PermutationGroup::close(6, vec![rot], 10).unwrap()
    }

    fn w(v: &[usize]) -> Walk {
        Walk::from_vec(v.to_vec())
    }

    /// Every consistent walk of length `n` starting at `start`, by sweeping
    /// shunt powers: `(u, u^g, .., u^{g^n})` for all `g` with `u ~ u^g`.
    pub(crate) fn consistent_walks_from(group: &PermutationGroup, graph: &Graph, start: usize, n: usize) -> Vec<Walk> {
        let mut out = BTreeSet::new();
        for g in group.elements() {
            if !graph.is_adjacent(start, g.apply(start)) {
                continue;
            }
            let mut v = vec![start];
            for _ in 0..n {
                v.push(g.apply(*v.last().unwrap()));
            }
            out.insert(Walk(v));
        }
        out.into_iter().collect()
    }

    #[test]
    fn shunt_examples_in_c6() {
        let (c6, d6) = aut("cycle:6");
        assert_eq!(shunts(&d6, &Walk::new(&c6, vec![0, 1]).unwrap()).len(), 2);
        let back = Walk::new(&c6, vec![0, 1, 0]).unwrap();
        let sh = shunts(&d6, &back);
        assert_eq!(sh.len(), 1);
        assert_eq!(sh[0].apply(0), 1);
        assert_eq!(sh[0].apply(1), 0);
        let rot = rotations6();
        // a rotation mapping 0 to 1 sends 1 to 2, never back to 0
        assert!(shunts(&rot, &back).is_empty());
        assert!(is_consistent(&rot, &back).is_none());
        assert_eq!(successors(&rot, &back).unwrap_err(), Error::NotConsistent);
        // (1, 0) is consistent under rotations via the inverse rotation
        assert_eq!(shunts(&rot, &w(&[1, 0])).len(), 1);
    }

    #[test]
    fn walk_validation() {
        let (c6, _) = aut("cycle:6");
        assert!(Walk::new(&c6, vec![2, 2]).is_err());
        assert!(Walk::new(&c6, vec![2]).is_err());
        assert!(Walk::new(&c6, vec![0, 2]).is_err());
        let walk = Walk::new(&c6, vec![0, 1, 2]).unwrap();
        assert_eq!(walk.len(), 2);
        assert_eq!(serde_json::to_string(&walk).unwrap(), "[0,1,2]");
    }

    #[test]
    fn consistency_examples() {
        let (k4, s4) = aut("complete:4");
        let witness = is_consistent(&s4, &w(&[0, 1])).unwrap();
        assert!(witness.is_valid());
        let (pet, a) = aut("petersen");
        let two_arc = pet.n_arcs(2)[0].clone();
        assert!(is_consistent(&a, &Walk::new(&pet, two_arc).unwrap()).is_some());
        assert!(is_consistent(&s4, &Walk::new(&k4, vec![0, 1, 2, 3]).unwrap()).is_some());
    }

    #[test]
    fn successor_examples() {
        let (k5, s5) = aut("complete:5");
        let succ = successors(&s5, &w(&[0, 1])).unwrap();
        assert_eq!(succ, vec![w(&[1, 0]), w(&[1, 2]), w(&[1, 3]), w(&[1, 4])]);
        assert_eq!(successor_count(&s5, &w(&[0, 1])).unwrap(), 4);
        let _ = k5;

        let (pet, a) = aut("petersen");
        let arc2 = Walk::new(&pet, pet.n_arcs(2)[0].clone()).unwrap();
        assert_eq!(successors(&a, &arc2).unwrap().len(), 2);

        let (_, d6) = aut("cycle:6");
        assert_eq!(successor_count(&d6, &w(&[0, 1, 0])).unwrap(), 1);
        assert_eq!(successors(&d6, &w(&[0, 1, 0])).unwrap(), vec![w(&[1, 0, 1])]);

        let (q3, b) = aut("hypercube:3");
        let arc2 = Walk::new(&q3, vec![0, 1, 3]).unwrap();
        assert_eq!(successor_count(&b, &arc2).unwrap(), 2);
    }

    #[test]
    fn induced_cycle_examples() {
        let rot = rotations6();
        let witness = is_consistent(&rot, &w(&[0, 1])).unwrap();
        assert_eq!(induced_cycle(&witness), w(&[0, 1, 2, 3, 4, 5, 0]));

        let (_, d6) = aut("cycle:6");
        let witness = is_consistent(&d6, &w(&[0, 1, 0])).unwrap();
        assert_eq!(induced_cycle(&witness), w(&[0, 1, 0]));

        let three = Permutation::from_cycles(4, &[&[0, 1, 2]]).unwrap();
        let witness = ConsistencyWitness {
            walk: w(&[0, 1]),
            shunt: three,
            group_order: 24,
        };
        assert_eq!(induced_cycle(&witness), w(&[0, 1, 2, 0]));
    }

    #[test]
    fn induced_cycle_truncates_a_wrapped_walk() {
        let rot = Permutation::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).unwrap();
        let witness = ConsistencyWitness {
            walk: w(&[0, 1, 2, 3, 4, 5, 0, 1, 2]),
            shunt: rot,
            group_order: 6,
        };
        assert_eq!(induced_cycle(&witness), w(&[0, 1, 2, 3, 4, 5, 0]));
    }

    /// Independent oracle: depth-first enumeration of all rooted directed
    /// cycles (trivial ones included), consistency by transporter search, and
    /// orbits by minimum image over the whole group.
    fn oracle_orbits(graph: &Graph, group: &PermutationGroup) -> Vec<(usize, usize)> {
        let n = graph.vertex_count();
        let mut cycles = Vec::new();
        for start in 0..n {
            let mut path = vec![start];
            dfs_cycles(graph, &mut path, &mut cycles);
        }
        let mut canon: HashMap<Vec<usize>, usize> = HashMap::new();
        for c in cycles {
            let head = &c[..c.len() - 1];
            let tail = &c[1..];
            let consistent = group.elements().iter().any(|g| g.maps_tuple(head, tail));
            if consistent {
                let min = group.elements().iter().map(|g| g.apply_tuple(&c)).min().unwrap();
                canon.insert(min, c.len() - 1);
            }
        }
        let mut out: Vec<(usize, usize)> = canon
            .into_iter()
            .map(|(rep, len)| (len, group.elements().iter().filter(|g| g.fixes_all(&rep)).count()))
            .collect();
        out.sort_unstable();
        out
    }

    fn dfs_cycles(graph: &Graph, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        for &x in graph.neighbors(last) {
            if x == path[0] {
                let mut c = path.clone();
                c.push(x);
                out.push(c);
            } else if !path.contains(&x) {
                path.push(x);
                dfs_cycles(graph, path, out);
                path.pop();
            }
        }
    }

    #[test]
    fn census_matches_independent_enumeration() {
        for spec in ["cycle:6", "complete:4", "hypercube:3", "petersen", "complete:5"] {
            let (g, a) = aut(spec);
            let census = consistent_cycle_orbits(&a, &g).unwrap();
            let mut mine: Vec<(usize, usize)> = census.table.iter().map(|r| (r.length, r.stabilizer_order)).collect();
            mine.sort_unstable();
            assert_eq!(mine, oracle_orbits(&g, &a), "{spec}");
            assert_eq!(census.table.len(), g.valence().unwrap());
        }
    }

    #[test]
    fn census_examples() {
        let (c6, d6) = aut("cycle:6");
        let census = consistent_cycle_orbits(&d6, &c6).unwrap();
        let lengths: Vec<usize> = census.table.iter().map(|r| r.length).collect();
        assert_eq!(lengths, vec![2, 6]);
        assert!(census.table.0[0].trivial);

        let (pet, a) = aut("petersen");
        let census = consistent_cycle_orbits(&a, &pet).unwrap();
        let lengths: Vec<usize> = census.table.iter().map(|r| r.length).collect();
        assert_eq!(lengths, vec![2, 5, 6]);

        let (k5, s5) = aut("complete:5");
        let census = consistent_cycle_orbits(&s5, &k5).unwrap();
        let counts: Vec<(usize, usize)> = census.table.iter().map(|r| (r.length, r.shunt_count)).collect();
        assert_eq!(counts, vec![(2, 6), (3, 2), (4, 1), (5, 1)]);
    }

    #[test]
    fn census_of_a_non_transitive_group_skips_the_count() {
        let (c6, _) = aut("cycle:6");
        let refl = Permutation::from_cycles(6, &[&[1, 5], &[2, 4]]).unwrap();
        let g = PermutationGroup::close(6, vec![refl], 10).unwrap();
        let census = consistent_cycle_orbits(&g, &c6).unwrap();
        assert!(!census.vertex_transitive);
        for r in census.table.iter() {
            assert_eq!(r.orbit_size * r.stabilizer_order, 2);
        }
    }

    #[test]
    fn census_lookup_covers_members() {
        let (q3, a) = aut("hypercube:3");
        let census = consistent_cycle_orbits(&a, &q3).unwrap();
        for (i, r) in census.table.iter().enumerate() {
            assert_eq!(census.orbit_of(&r.representative), Some(i));
            assert_eq!(census.members(i).count(), r.orbit_size);
            assert_eq!(census.members(i).next(), Some(&r.representative));
        }
        assert_eq!(census.orbit_of(&w(&[0, 1, 3])), None);
    }

    #[test]
    fn walk_identities_on_all_short_walks() {
        for spec in ["cycle:6", "complete:4", "hypercube:3", "petersen", "complete:5"] {
            let (g, a) = aut(spec);
            for n in 1..=4 {
                for walk in consistent_walks_from(&a, &g, 0, n) {
                    check_walk_identities(&a, &walk);
                }
            }
        }
    }

    /// Shunt coset identities, successors two ways, and the order identity.
    pub(crate) fn check_walk_identities(group: &PermutationGroup, walk: &Walk) {
        let sh: HashSet<Permutation> = shunts(group, walk).into_iter().collect();
        let g0 = sh.iter().min().unwrap();
        let left: HashSet<Permutation> = group.stabilizer_elements(walk.tail()).map(|h| g0 * h).collect();
        let right: HashSet<Permutation> = group.stabilizer_elements(walk.head()).map(|h| h * g0).collect();
        assert_eq!(sh, left, "{walk:?}");
        assert_eq!(sh, right, "{walk:?}");

        let succ: BTreeSet<Walk> = successors(group, walk).unwrap().into_iter().collect();
        let by_shunts: BTreeSet<Walk> = sh.iter().map(|g| walk.image(g)).collect();
        let beta = walk.image(g0);
        let by_stabilizer: BTreeSet<Walk> = group.stabilizer_elements(walk.tail()).map(|h| beta.image(h)).collect();
        assert_eq!(succ, by_shunts);
        assert_eq!(succ, by_stabilizer);

        assert_eq!(
            group.stabilizer_order(walk.head()),
            group.stabilizer_order(walk.vertices()) * succ.len()
        );

        if let Some(shorter) = walk.drop_last() {
            let sh_short: HashSet<Permutation> = shunts(group, &shorter).into_iter().collect();
            assert!(sh.is_subset(&sh_short));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn shunts_conjugate_with_the_walk(x in 0usize..120, start in 0usize..10, n in 1usize..5, pick in 0usize..1000) {
            let (pet, a) = aut("petersen");
            let walks = consistent_walks_from(&a, &pet, start, n);
            let walk = &walks[pick % walks.len()];
            let x = &a.elements()[x];
            let moved = walk.image(x);
            let lhs: BTreeSet<Permutation> = shunts(&a, &moved).into_iter().collect();
            let rhs: BTreeSet<Permutation> = shunts(&a, walk).iter().map(|g| g.conjugate_by(x)).collect();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
