//! Property (R), the `~_α` relation on walks, and trivial-stabilizer certificates.
//!
//! A consistent walk has Property (R) when every vertex is the last vertex of
//! some chain of successive successors starting at the walk. This holds
//! exactly when the shunts of the walk generate a vertex-transitive group, so
//! there are two independent ways to decide it, and both are offered here.

use std::collections::{HashMap, VecDeque};

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_n_arc_transitive, Graph};
use crate::perm::{generated_orbit, generated_tuple_orbit, Permutation, PermutationGroup};
use crate::walks::{shunts, successors, Walk};

/// Walks per orbit beyond which [`sim_alpha_classes`] refuses to run.
pub const DEFAULT_ORBIT_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PropertyRMethod {
    Chase,
    ShuntGroup,
}

/// Evidence backing a Property (R) verdict.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PropertyRWitness {
    /// Orbit of `v_0` under `⟨G_α̂, g⟩`.
    ShuntGroup { orbit_size: usize, vertex_count: usize },
    /// Successor steps from the walk to one ending at `target`, if reached.
    Chain {
        target: usize,
        steps: Option<Vec<Walk>>,
        reached: usize,
        vertex_count: usize,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyRReport {
    pub walk: Walk,
    pub verdict: bool,
    pub method: PropertyRMethod,
    pub witness: PropertyRWitness,
}

fn require_shunt(group: &PermutationGroup, walk: &Walk) -> Result<Permutation> {
    group
        .transporters(walk.head(), walk.tail())
        .min()
        .cloned()
        .ok_or(Error::NotConsistent)
}

/// Decides Property (R) by testing `⟨G_α̂, g⟩` for transitivity on vertices.
pub fn property_r_by_shunt_group(group: &PermutationGroup, walk: &Walk) -> Result<PropertyRReport> {
    let g = require_shunt(group, walk)?;
    let mut gens: Vec<Permutation> = group.pointwise_stabilizer(walk.head()).generators().to_vec();
    gens.push(g);
    let n = group.degree();
    let orbit_size = generated_orbit(&gens, walk.first(), n).len();
    Ok(PropertyRReport {
        walk: walk.clone(),
        verdict: orbit_size == n,
        method: PropertyRMethod::ShuntGroup,
        witness: PropertyRWitness::ShuntGroup {
            orbit_size,
            vertex_count: n,
        },
    })
}

/// Decides Property (R) by breadth-first search over successor chains.
///
/// Every walk met is an image `α^x`, and its successors are the images under
/// `x` of the successors of `α`, so only `Succ(α)` is ever computed from
/// scratch. Successors are explored in lexicographic order, which makes the
/// returned chain reproducible.
pub fn property_r_by_chase(group: &PermutationGroup, walk: &Walk, target: usize) -> Result<PropertyRReport> {
    let n = group.degree();
    if target >= n {
        return Err(Error::VertexOutOfRange {
            vertex: target,
            count: n,
        });
    }
    // one shunt per successor of α, in successor order
    let mut steps: Vec<(Walk, Permutation)> = Vec::new();
    for g in shunts(group, walk) {
        let next = walk.image(&g);
        if !steps.iter().any(|(w, _)| *w == next) {
            steps.push((next, g));
        }
    }
    if steps.is_empty() {
        return Err(Error::NotConsistent);
    }

    let mut index: HashMap<Walk, usize> = HashMap::from([(walk.clone(), 0)]);
    let mut nodes: Vec<(Walk, Permutation, Option<usize>)> = vec![(walk.clone(), Permutation::identity(n), None)];
    let mut reached = vec![false; n];
    reached[walk.last()] = true;
    let mut reached_count = 1;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        if reached_count == n && reached[target] {
            break;
        }
        let x = nodes[i].1.clone();
        let mut next: Vec<(Walk, Permutation)> = steps.iter().map(|(s, h)| (s.image(&x), h * &x)).collect();
        next.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        for (w, y) in next {
            if index.contains_key(&w) {
                continue;
            }
            if !reached[w.last()] {
                reached[w.last()] = true;
                reached_count += 1;
            }
            index.insert(w.clone(), nodes.len());
            queue.push_back(nodes.len());
            nodes.push((w, y, Some(i)));
        }
    }

    let chain = nodes.iter().position(|(w, _, _)| w.last() == target).map(|mut i| {
        let mut out = Vec::new();
        while let Some(parent) = nodes[i].2 {
            out.push(nodes[i].0.clone());
            i = parent;
        }
        out.reverse();
        out
    });
    Ok(PropertyRReport {
        walk: walk.clone(),
        verdict: reached_count == n,
        method: PropertyRMethod::Chase,
        witness: PropertyRWitness::Chain {
            target,
            steps: chain,
            reached: reached_count,
            vertex_count: n,
        },
    })
}

/// The three sufficient conditions for a one-step extension to inherit Property (R).
#[derive(Debug, Clone, Serialize)]
pub struct ConditionReport {
    pub walk: Walk,
    pub shunt: Permutation,
    /// `ℓ = |Succ(α)|`.
    pub ell: usize,
    /// `k = |Succ(α̂)|`.
    pub k: usize,
    pub condition_a: bool,
    pub condition_b: bool,
    pub condition_c: bool,
    /// `|⟨G_α̂, G_{(v_1, .., v_n)}⟩|`.
    pub x_order: usize,
}

impl ConditionReport {
    pub fn any(&self) -> bool {
        self.condition_a || self.condition_b || self.condition_c
    }
}

/// No `i` with `ell <= i < k` divides `k`.
pub fn no_divisor_between(ell: usize, k: usize) -> bool {
    !(ell.max(1)..k).any(|i| k.is_multiple_of(i))
}

/// Evaluates conditions (a), (b) and (c) for `walk` with the given shunt.
pub fn check_conditions(group: &PermutationGroup, walk: &Walk, shunt: &Permutation) -> Result<ConditionReport> {
    if walk.len() < 2 {
        return Err(Error::WalkTooShort { min: 2 });
    }
    if !shunt.maps_tuple(walk.head(), walk.tail()) || !group.contains(shunt) {
        return Err(Error::NotConsistent);
    }
    let hat = walk.drop_last().expect("length is at least 2");
    let ell = successors(group, walk)?.len();
    let k = successors(group, &hat)?.len();

    // X = ⟨G_(v0..v_{n-1}), G_(v1..vn)⟩ lies inside G_(v1..v_{n-1})
    let middle = &walk.vertices()[1..walk.len()];
    let mut gens: Vec<Permutation> = group.pointwise_stabilizer(hat.vertices()).generators().to_vec();
    gens.extend_from_slice(group.pointwise_stabilizer(walk.tail()).generators());
    let x = PermutationGroup::close(group.degree(), gens, group.order())?;
    let x_order = x.order();

    // X acts on Succ(α̂), which contains (v_1, .., v_n)
    let condition_b = generated_tuple_orbit(x.generators(), walk.tail()).len() == k;
    let condition_c = x_order == group.stabilizer_order(middle);
    if condition_c && !condition_b {
        return Err(Error::Invariant(format!("condition (c) without (b) for {walk:?}")));
    }
    Ok(ConditionReport {
        walk: walk.clone(),
        shunt: shunt.clone(),
        ell,
        k,
        condition_a: no_divisor_between(ell, k),
        condition_b,
        condition_c,
        x_order,
    })
}

/// Whether `G_α` fixes every successor of `α`.
///
/// Computed directly and through the criterion that each one-step extension
/// `(v_0, .., v_n, u)` has a single successor; a disagreement is an error.
pub fn stabilizer_fixes_successors(group: &PermutationGroup, walk: &Walk) -> Result<bool> {
    let succ = successors(group, walk)?;
    let direct = succ.iter().all(|b| {
        group
            .stabilizer_elements(walk.vertices())
            .all(|h| h.apply(b.last()) == b.last())
    });
    let mut via_extensions = true;
    for b in &succ {
        let extended = walk.extended(b.last());
        if successors(group, &extended)?.len() != 1 {
            via_extensions = false;
            break;
        }
    }
    if direct != via_extensions {
        return Err(Error::Invariant(format!(
            "successor fix check disagrees for {walk:?}: direct {direct}, by extensions {via_extensions}"
        )));
    }
    Ok(direct)
}

/// Where the Property (R) induction of a certificate starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Seed {
    /// The first arc, which has Property (R) under any arc-transitive group on a connected graph.
    Arc,
    /// The prefix of this length, whose Property (R) is checked by the shunt-group test.
    Verified { prefix_len: usize },
}

impl Seed {
    fn len(self) -> usize {
        match self {
            Seed::Arc => 1,
            Seed::Verified { prefix_len } => prefix_len,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrefixConditions {
    pub n: usize,
    pub a: bool,
    pub b: bool,
    pub c: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum CertificationFailure {
    SeedLacksPropertyR,
    /// Prefix `α_{n+1}` satisfies none of the conditions.
    PrefixConditions {
        n: usize,
    },
    FinalFixCheck,
}

/// Evidence that a consistent walk has a trivial stabilizer, or the first step where the argument breaks.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub walk: Walk,
    pub shunt: Permutation,
    pub seed: Seed,
    pub prefix_conditions: Vec<PrefixConditions>,
    pub fixes_successors: bool,
    /// `|G_α|`, computed directly.
    pub stabilizer_order: usize,
    pub certified: bool,
    pub failure: Option<CertificationFailure>,
}

/// Runs the Property (R) induction from `seed` up to `walk`, then the final fix check.
///
/// Condition reports are collected for every step; the first step where all
/// three conditions fail, or a failed fix check, is reported as the failure.
/// A certified walk whose directly computed stabilizer is not trivial would
/// contradict the argument and is returned as an error.
pub fn certify_trivial_stabilizer(
    group: &PermutationGroup,
    graph: &Graph,
    walk: &Walk,
    seed: Seed,
) -> Result<Certificate> {
    if !graph.is_connected() {
        return Err(Error::NotConnected);
    }
    if !is_n_arc_transitive(group, graph, 1)? {
        return Err(Error::NotArcTransitive);
    }
    let shunt = require_shunt(group, walk)?;
    let r = walk.len();
    let start = seed.len();
    if start == 0 || start > r {
        return Err(Error::InvalidWalk(format!("seed prefix {start} outside 1..={r}")));
    }

    let mut failure = None;
    if let Seed::Verified { prefix_len } = seed {
        if !property_r_by_shunt_group(group, &walk.prefix(prefix_len))?.verdict {
            failure = Some(CertificationFailure::SeedLacksPropertyR);
        }
    }
    let mut prefix_conditions = Vec::new();
    for n in start..r {
        let report = check_conditions(group, &walk.prefix(n + 1), &shunt)?;
        prefix_conditions.push(PrefixConditions {
            n,
            a: report.condition_a,
            b: report.condition_b,
            c: report.condition_c,
        });
        if failure.is_none() && !report.any() {
            failure = Some(CertificationFailure::PrefixConditions { n });
        }
    }
    let fixes_successors = stabilizer_fixes_successors(group, walk)?;
    if failure.is_none() && !fixes_successors {
        failure = Some(CertificationFailure::FinalFixCheck);
    }
    let stabilizer_order = group.stabilizer_order(walk.vertices());
    if failure.is_none() && stabilizer_order != 1 {
        return Err(Error::Invariant(format!(
            "{walk:?} passed every check but its stabilizer has order {stabilizer_order}"
        )));
    }
    Ok(Certificate {
        walk: walk.clone(),
        shunt,
        seed,
        prefix_conditions,
        fixes_successors,
        stabilizer_order,
        certified: failure.is_none(),
        failure,
    })
}

/// The classes of `~_α` on the orbit `α̂^G`.
#[derive(Debug, Clone, Serialize)]
pub struct SimClasses {
    /// Each class sorted, classes ordered by smallest member.
    pub classes: Vec<Vec<Walk>>,
    pub orbit_size: usize,
}

impl SimClasses {
    pub fn class_of(&self, walk: &Walk) -> Option<usize> {
        self.classes.iter().position(|c| c.binary_search(walk).is_ok())
    }
}

/// Partitions `α̂^G` into `~_α` classes.
///
/// The relation is the reachability closure of `β̂ → γ̂` over `β ∈ α^G` and
/// `γ ∈ Succ(β)`. It is computed twice, as strongly connected components and
/// as weakly connected components; the two agree because the closure is an
/// equivalence relation, and a disagreement is reported as an error. The
/// result is also checked to be permuted by every generator of the group.
pub fn sim_alpha_classes(group: &PermutationGroup, walk: &Walk, cap: usize) -> Result<SimClasses> {
    if walk.len() < 2 {
        return Err(Error::WalkTooShort { min: 2 });
    }
    let steps: Vec<Walk> = successors(group, walk)?;
    let mut full_orbit = capped_tuple_orbit(group, walk.vertices(), cap)?;
    full_orbit.sort_unstable();
    let hat = walk.drop_last().expect("length is at least 2");
    let mut hats = capped_tuple_orbit(group, hat.vertices(), cap)?;
    hats.sort_unstable();
    let index: HashMap<&[usize], usize> = hats.iter().enumerate().map(|(i, h)| (h.as_slice(), i)).collect();

    // transporter x with α^x = β, found by walking generator images
    let mut transporter: HashMap<Vec<usize>, Permutation> =
        HashMap::from([(walk.vertices().to_vec(), Permutation::identity(group.degree()))]);
    let mut stack = vec![walk.vertices().to_vec()];
    while let Some(t) = stack.pop() {
        let x = transporter[&t].clone();
        for s in group.generators() {
            let u = s.apply_tuple(&t);
            if !transporter.contains_key(&u) {
                transporter.insert(u.clone(), &x * s);
                stack.push(u);
            }
        }
    }

    let mut digraph: DiGraph<(), ()> = DiGraph::with_capacity(hats.len(), full_orbit.len() * steps.len());
    for _ in &hats {
        digraph.add_node(());
    }
    let mut weak = UnionFind::<usize>::new(hats.len());
    for beta in &full_orbit {
        let x = &transporter[beta];
        let from = index[&beta[..beta.len() - 1]];
        for s in &steps {
            let gamma = s.image(x);
            let to = index[gamma.head()];
            digraph.add_edge(NodeIndex::new(from), NodeIndex::new(to), ());
            weak.union(from, to);
        }
    }
    let strong = tarjan_scc(&digraph);
    let weak_labels = weak.into_labeling();
    let mut weak_count: Vec<usize> = weak_labels.clone();
    weak_count.sort_unstable();
    weak_count.dedup();
    if strong.len() != weak_count.len() {
        return Err(Error::Invariant(format!(
            "{} strong but {} weak components of the successor relation",
            strong.len(),
            weak_count.len()
        )));
    }

    let mut classes: Vec<Vec<Walk>> = strong
        .into_iter()
        .map(|comp| {
            let mut c: Vec<Walk> = comp
                .into_iter()
                .map(|i| Walk::from_vec(hats[i.index()].clone()))
                .collect();
            c.sort_unstable();
            c
        })
        .collect();
    classes.sort_unstable();
    let result = SimClasses {
        orbit_size: hats.len(),
        classes,
    };
    for s in group.generators() {
        for class in &result.classes {
            let image_class = result.class_of(&class[0].image(s));
            if !class.iter().all(|w| result.class_of(&w.image(s)) == image_class) {
                return Err(Error::Invariant("group does not permute the ~ classes".into()));
            }
        }
    }
    Ok(result)
}

fn capped_tuple_orbit(group: &PermutationGroup, tuple: &[usize], cap: usize) -> Result<Vec<Vec<usize>>> {
    let mut seen: std::collections::HashSet<Vec<usize>> = std::collections::HashSet::from([tuple.to_vec()]);
    let mut stack = vec![tuple.to_vec()];
    while let Some(t) = stack.pop() {
        for s in group.generators() {
            let u = s.apply_tuple(&t);
            if !seen.contains(&u) {
                if seen.len() >= cap {
                    return Err(Error::OrbitTooLarge { cap });
                }
                seen.insert(u.clone());
                stack.push(u);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{lex_blowup, named_graph, wreath_generators};
    use crate::walks::tests::{aut, consistent_walks_from, rotations6};
    use crate::walks::{is_consistent, Walk};

    fn w(v: &[usize]) -> Walk {
        Walk::from_vec(v.to_vec())
    }

    #[test]
    fn arcs_of_arc_transitive_groups_have_property_r() {
        for spec in ["complete:4", "hypercube:3", "petersen", "cycle:6"] {
            let (g, a) = aut(spec);
            let arc = w(&[0, g.neighbors(0)[0]]);
            assert!(property_r_by_shunt_group(&a, &arc).unwrap().verdict, "{spec}");
            for target in 0..g.vertex_count() {
                assert!(property_r_by_chase(&a, &arc, target).unwrap().verdict);
            }
        }
    }

    #[test]
    fn chase_chain_is_a_successor_chain() {
        let (_, a) = aut("complete:4");
        let arc = w(&[0, 1]);
        let report = property_r_by_chase(&a, &arc, 1).unwrap();
        let PropertyRWitness::Chain { steps, .. } = &report.witness else {
            panic!("chase returns a chain")
        };
        assert_eq!(steps.as_deref(), Some(&[][..]));

        let (_, a) = aut("hypercube:3");
        let report = property_r_by_chase(&a, &arc, 6).unwrap();
        let PropertyRWitness::Chain { steps: Some(steps), .. } = &report.witness else {
            panic!("target is reachable")
        };
        assert_eq!(steps.last().unwrap().last(), 6);
        let mut prev = arc.clone();
        for s in steps {
            assert!(successors(&a, &prev).unwrap().contains(s));
            prev = s.clone();
        }
        // Q3 has diameter 3
        assert!(steps.len() <= 4);
    }

    #[test]
    fn hexagon_prefix_under_rotations() {
        let rot = rotations6();
        let walk = w(&[0, 1, 2]);
        assert!(property_r_by_shunt_group(&rot, &walk).unwrap().verdict);
        assert!(property_r_by_chase(&rot, &walk, 4).unwrap().verdict);
        let classes = sim_alpha_classes(&rot, &walk, DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(classes.classes.len(), 1);
        assert_eq!(classes.orbit_size, 6);
    }

    #[test]
    fn non_consistent_walks_are_rejected() {
        let rot = rotations6();
        assert_eq!(
            property_r_by_shunt_group(&rot, &w(&[0, 1, 0])).unwrap_err(),
            Error::NotConsistent
        );
        assert_eq!(
            property_r_by_chase(&rot, &w(&[0, 1, 0]), 0).unwrap_err(),
            Error::NotConsistent
        );
    }

    #[test]
    fn methods_agree_and_conditions_are_sound() {
        for spec in [
            "cycle:6",
            "complete:4",
            "hypercube:3",
            "petersen",
            "complete:5",
            "blowup:2:cycle:4",
        ] {
            let (g, a) = aut(spec);
            for n in 1..=5 {
                for walk in consistent_walks_from(&a, &g, 0, n) {
                    let by_group = property_r_by_shunt_group(&a, &walk).unwrap().verdict;
                    let by_chase = property_r_by_chase(&a, &walk, 0).unwrap().verdict;
                    assert_eq!(by_group, by_chase, "{spec} {walk:?}");
                    if n >= 2 {
                        let g0 = is_consistent(&a, &walk).unwrap().shunt;
                        let report = check_conditions(&a, &walk, &g0).unwrap();
                        let hat = walk.drop_last().unwrap();
                        if property_r_by_shunt_group(&a, &hat).unwrap().verdict && report.any() {
                            assert!(by_group, "{spec} {walk:?}");
                        }
                        assert!(report.ell <= report.k);
                        assert!(!report.condition_c || report.condition_b);
                    }
                    let fixes = stabilizer_fixes_successors(&a, &walk).unwrap();
                    if by_group && fixes {
                        assert_eq!(a.stabilizer_order(walk.vertices()), 1, "{spec} {walk:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn blowup_walks_under_the_wreath_group() {
        let (c4, d4) = aut("cycle:4");
        let b = lex_blowup(&c4, 2).unwrap();
        let wreath = PermutationGroup::close(8, wreath_generators(&b, &d4), 1000).unwrap();
        assert_eq!(wreath.order(), 128);
        let mut verdicts = [0usize; 2];
        for n in 1..=4 {
            for walk in consistent_walks_from(&wreath, &b.graph, 0, n) {
                let report = property_r_by_shunt_group(&wreath, &walk).unwrap();
                let chase = property_r_by_chase(&wreath, &walk, 0).unwrap();
                assert_eq!(report.verdict, chase.verdict, "{walk:?}");
                verdicts[usize::from(report.verdict)] += 1;
            }
        }
        assert!(verdicts[1] > 0);
    }

    #[test]
    fn divisor_condition_arithmetic() {
        assert!(no_divisor_between(3, 3));
        assert!(no_divisor_between(2, 3));
        assert!(!no_divisor_between(2, 4));
        assert!(no_divisor_between(1, 1));
        assert!(!no_divisor_between(1, 4));
    }

    #[test]
    fn check_conditions_rejects_short_and_bad_input() {
        let (_, a) = aut("complete:4");
        let g0 = is_consistent(&a, &w(&[0, 1])).unwrap().shunt;
        assert_eq!(
            check_conditions(&a, &w(&[0, 1]), &g0).unwrap_err(),
            Error::WalkTooShort { min: 2 }
        );
        let id = Permutation::identity(4);
        assert_eq!(
            check_conditions(&a, &w(&[0, 1, 2]), &id).unwrap_err(),
            Error::NotConsistent
        );
    }

    #[test]
    fn fix_check_examples() {
        let (_, s5) = aut("complete:5");
        assert!(!stabilizer_fixes_successors(&s5, &w(&[0, 1])).unwrap());
        // Petersen is 3-arc-regular: a 3-arc has trivial stabilizer
        let (pet, a) = aut("petersen");
        let arc3 = w(&pet.n_arcs(3)[0]);
        assert_eq!(a.stabilizer_order(arc3.vertices()), 1);
        assert!(stabilizer_fixes_successors(&a, &arc3).unwrap());
    }

    #[test]
    fn certificates() {
        let (k5, s5) = aut("complete:5");
        let cert = certify_trivial_stabilizer(&s5, &k5, &w(&[0, 1]), Seed::Arc).unwrap();
        assert!(!cert.certified);
        assert_eq!(cert.failure, Some(CertificationFailure::FinalFixCheck));
        let json = serde_json::to_value(&cert).unwrap();
        assert_eq!(json["failure"]["reason"], "final_fix_check");

        // a 3-arc of Petersen: every prefix step satisfies (a)
        let (pet, a) = aut("petersen");
        let arc3 = w(&pet.n_arcs(3)[0]);
        let cert = certify_trivial_stabilizer(&a, &pet, &arc3, Seed::Arc).unwrap();
        assert!(cert.certified, "{cert:?}");
        assert_eq!(cert.stabilizer_order, 1);
        assert_eq!(cert.prefix_conditions.len(), 2);
        assert!(cert.prefix_conditions.iter().all(|p| p.a));
        let json = serde_json::to_value(&cert).unwrap();
        assert_eq!(json["stabilizer_order"], 1);
        assert_eq!(json["prefix_conditions"][0]["n"], 1);
    }

    #[test]
    fn certificate_preconditions() {
        let c4 = named_graph("cycle:4").unwrap();
        let rot = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let g = PermutationGroup::close(4, vec![rot], 10).unwrap();
        // rotations alone are not arc-transitive on C4
        assert_eq!(
            certify_trivial_stabilizer(&g, &c4, &w(&[0, 1]), Seed::Arc).unwrap_err(),
            Error::NotArcTransitive
        );
        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let a = crate::graph::automorphism_group(&two, 1000).unwrap();
        assert_eq!(
            certify_trivial_stabilizer(&a, &two, &w(&[0, 1]), Seed::Arc).unwrap_err(),
            Error::NotConnected
        );
    }

    #[test]
    fn sim_classes_form_blocks() {
        let (k4, a) = aut("complete:4");
        for n in 2..=4 {
            for walk in consistent_walks_from(&a, &k4, 0, n) {
                let classes = sim_alpha_classes(&a, &walk, DEFAULT_ORBIT_CAP).unwrap();
                let hat = walk.drop_last().unwrap();
                let g0 = is_consistent(&a, &walk).unwrap().shunt;
                assert_eq!(classes.class_of(&hat), classes.class_of(&hat.image(&g0)));
                let total: usize = classes.classes.iter().map(Vec::len).sum();
                assert_eq!(total, classes.orbit_size);
            }
        }
    }

    #[test]
    fn sim_classes_respect_the_cap() {
        let (pet, a) = aut("petersen");
        assert_eq!(
            sim_alpha_classes(&a, &w(&pet.n_arcs(2)[0]), 5).map(|_| ()).unwrap_err(),
            Error::OrbitTooLarge { cap: 5 }
        );
    }
}
