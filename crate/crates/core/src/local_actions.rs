//! Weakly p-subregular local actions and constructive searches for walks with trivial stabilizer.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_n_arc_transitive, local_group, Graph, LocalAction};
use crate::perm::{generated_orbit, PermutationGroup};
use crate::reachability::{certify_trivial_stabilizer, property_r_by_shunt_group, Certificate, Seed};
use crate::walks::{consistent_cycle_orbits, is_consistent, successor_count, ConsistencyWitness, Walk};

/// Default cap on walk length for the exhaustive search.
pub const DEFAULT_DEPTH_CAP: usize = 64;

/// Points `x, y` of a local action with `|L_x| = p` whose `⟨L_x, L_y⟩`-orbits cover the domain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WpsWitness {
    pub p: usize,
    /// Local indices into the neighborhood of `base_vertex`.
    pub x: usize,
    pub y: usize,
    pub base_vertex: usize,
    /// The graph vertices behind `x` and `y`.
    pub x_vertex: usize,
    pub y_vertex: usize,
    pub lx_order: usize,
    pub ly_order: usize,
    pub lbar_order: usize,
    pub covered: Vec<usize>,
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// First pair `(x, y)` in lexicographic order showing the local action is weakly p-subregular.
///
/// ```
/// use conwalk::{automorphism_group, local_group, named_graph, weakly_p_subregular};
/// let q3 = named_graph("hypercube:3").unwrap();
/// let aut = automorphism_group(&q3, 1000).unwrap();
/// let witness = weakly_p_subregular(&local_group(&aut, &q3, 0).unwrap()).unwrap().unwrap();
/// assert_eq!(witness.p, 2);
/// ```
pub fn weakly_p_subregular(local: &LocalAction) -> Result<Option<WpsWitness>> {
    let d = local.degree();
    let l = &local.group;
    let domain: Vec<usize> = (0..d).collect();
    if !l.is_transitive(&domain)? {
        return Err(Error::NotTransitive);
    }
    let point_stabilizer = |x: usize| l.pointwise_stabilizer(&[x]);
    for x in 0..d {
        let lx = point_stabilizer(x);
        if !is_prime(lx.order()) {
            continue;
        }
        for y in 0..d {
            let ly = point_stabilizer(y);
            let mut gens = lx.generators().to_vec();
            gens.extend_from_slice(ly.generators());
            let mut covered: Vec<usize> = generated_orbit(&gens, x, d);
            covered.extend(generated_orbit(&gens, y, d));
            covered.sort_unstable();
            covered.dedup();
            if covered.len() != d {
                continue;
            }
            if l.stabilizer_order(&[x, y]) != 1 {
                return Err(Error::Invariant(format!("L_(x,y) is not trivial for x={x}, y={y}")));
            }
            let lbar = PermutationGroup::close(d, gens, l.order())?;
            return Ok(Some(WpsWitness {
                p: lx.order(),
                x,
                y,
                base_vertex: local.base_vertex,
                x_vertex: local.domain[x],
                y_vertex: local.domain[y],
                lx_order: lx.order(),
                ly_order: ly.order(),
                lbar_order: lbar.order(),
                covered,
            }));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMethod {
    Wps,
    FourValent,
    Exhaustive,
}

/// Shape of `G_(u,v)` acting on the three neighbors of `v` other than `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ArcLocalGroup {
    Trivial,
    C2,
    C3,
    S3,
}

/// A walk with trivial stabilizer and how it was found.
#[derive(Debug, Clone, Serialize)]
pub struct TrivialWalk {
    pub method: SearchMethod,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<ArcLocalGroup>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wps: Option<WpsWitness>,
    pub witness: ConsistencyWitness,
    /// `|Succ(α_i)|` along the walk, from the seed onwards.
    pub successor_counts: Vec<usize>,
    pub certificate: Certificate,
}

fn check_setting(group: &PermutationGroup, graph: &Graph) -> Result<()> {
    if !graph.is_connected() {
        return Err(Error::NotConnected);
    }
    if !is_n_arc_transitive(group, graph, 1)? {
        return Err(Error::NotArcTransitive);
    }
    Ok(())
}

/// Extends `start` one vertex at a time, always by the smallest successor end
/// that keeps more than one successor, until no such extension exists.
///
/// Each step divides `|G_α|` by the successor count, so the loop ends after
/// at most `log2 |G_v|` steps.
fn greedy_maximal_extension(group: &PermutationGroup, start: Walk) -> Result<(Walk, Vec<usize>)> {
    let mut walk = start;
    let mut counts = vec![successor_count(group, &walk)?];
    if counts[0] <= 1 {
        return Err(Error::Invariant(format!("{walk:?} does not have several successors")));
    }
    'extend: loop {
        let ends: Vec<usize> = crate::walks::successors(group, &walk)?.iter().map(Walk::last).collect();
        for u in ends {
            let longer = walk.extended(u);
            let k = successor_count(group, &longer)?;
            if k > 1 {
                walk = longer;
                counts.push(k);
                continue 'extend;
            }
        }
        return Ok((walk, counts));
    }
}

fn witness_for(group: &PermutationGroup, walk: &Walk) -> Result<ConsistencyWitness> {
    is_consistent(group, walk).ok_or(Error::NotConsistent)
}

/// A walk with trivial stabilizer, starting from a weakly p-subregular pair `(x, v, y)`.
///
/// The local group at the smallest vertex supplies `x` and `y`; the walk
/// `(x, v, y)` is extended greedily while it has more than one successor. The
/// seed is checked for Property (R) directly and each later step uses the
/// divisor condition, which holds because every successor count equals `p`.
pub fn find_trivial_walk_wps(group: &PermutationGroup, graph: &Graph) -> Result<TrivialWalk> {
    check_setting(group, graph)?;
    let v = 0;
    if graph.degree(v) < 3 {
        return Err(Error::WrongValence {
            expected: 3,
            found: graph.degree(v),
        });
    }
    let local = local_group(group, graph, v)?;
    let wps = weakly_p_subregular(&local)?.ok_or(Error::NoWitness)?;
    let seed = Walk::new(graph, vec![wps.x_vertex, v, wps.y_vertex])?;
    if !property_r_by_shunt_group(group, &seed)?.verdict {
        return Err(Error::Invariant(format!("seed {seed:?} lacks Property (R)")));
    }
    let (walk, counts) = greedy_maximal_extension(group, seed)?;
    if let Some(&k) = counts.iter().find(|&&k| k != wps.p) {
        return Err(Error::Invariant(format!(
            "successor count {k} along the walk differs from p = {}",
            wps.p
        )));
    }
    let certificate = certify_trivial_stabilizer(group, graph, &walk, Seed::Verified { prefix_len: 2 })?;
    finish(group, SearchMethod::Wps, None, Some(wps), walk, counts, certificate)
}

fn finish(
    group: &PermutationGroup,
    method: SearchMethod,
    branch: Option<ArcLocalGroup>,
    wps: Option<WpsWitness>,
    walk: Walk,
    successor_counts: Vec<usize>,
    certificate: Certificate,
) -> Result<TrivialWalk> {
    let order = group.stabilizer_order(walk.vertices());
    if order != 1 || !certificate.certified {
        return Err(Error::Invariant(format!(
            "search ended at {walk:?} with stabilizer order {order} (certified: {})",
            certificate.certified
        )));
    }
    Ok(TrivialWalk {
        method,
        branch,
        wps,
        witness: witness_for(group, &walk)?,
        successor_counts,
        certificate,
    })
}

/// The group induced by `G_(u,v)` on `Γ(v) \ {u}`.
pub fn arc_local_group(group: &PermutationGroup, graph: &Graph, u: usize, v: usize) -> ArcLocalGroup {
    let rest: Vec<usize> = graph.neighbors(v).iter().copied().filter(|&w| w != u).collect();
    let induced: HashSet<Vec<usize>> = group
        .stabilizer_elements(&[u, v])
        .map(|g| g.apply_tuple(&rest))
        .collect();
    match induced.len() {
        1 => ArcLocalGroup::Trivial,
        2 => ArcLocalGroup::C2,
        3 => ArcLocalGroup::C3,
        _ => ArcLocalGroup::S3,
    }
}

/// A walk with trivial stabilizer in a 4-valent graph, following the shape of `G_(u,v)`.
///
/// * trivial: the arc `(u, v)` itself;
/// * `C2`: the local group is dihedral of degree 4 and the weakly p-subregular search applies;
/// * `C3` or `S3`: a 2-arc is extended greedily; every step satisfies the divisor condition.
pub fn find_trivial_walk_4valent(group: &PermutationGroup, graph: &Graph) -> Result<TrivialWalk> {
    match graph.valence() {
        Some(4) => {}
        _ => {
            return Err(Error::WrongValence {
                expected: 4,
                found: graph.degree(0),
            })
        }
    }
    check_setting(group, graph)?;
    let v = 0;
    let u = graph.neighbors(v)[0];
    let branch = arc_local_group(group, graph, u, v);
    match branch {
        ArcLocalGroup::Trivial => {
            let walk = Walk::new(graph, vec![u, v])?;
            let certificate = certify_trivial_stabilizer(group, graph, &walk, Seed::Arc)?;
            let counts = vec![successor_count(group, &walk)?];
            finish(
                group,
                SearchMethod::FourValent,
                Some(branch),
                None,
                walk,
                counts,
                certificate,
            )
        }
        ArcLocalGroup::C2 => {
            let mut found = find_trivial_walk_wps(group, graph)?;
            found.method = SearchMethod::FourValent;
            found.branch = Some(branch);
            Ok(found)
        }
        ArcLocalGroup::C3 | ArcLocalGroup::S3 => {
            let w = graph.neighbors(v).iter().copied().find(|&w| w != u).expect("valence 4");
            let start = Walk::new(graph, vec![u, v, w])?;
            let (walk, mut counts) = greedy_maximal_extension(group, start.clone())?;
            counts.insert(0, successor_count(group, &start.prefix(1))?);
            let certificate = certify_trivial_stabilizer(group, graph, &walk, Seed::Arc)?;
            finish(
                group,
                SearchMethod::FourValent,
                Some(branch),
                None,
                walk,
                counts,
                certificate,
            )
        }
    }
}

/// Breadth-first search over consistent walks from vertex 0 for one with trivial stabilizer.
///
/// Walks are kept up to the action of `G_0`, so each level holds one walk per
/// orbit. Fails with `DepthExhausted` past `depth_cap` and with
/// `OrbitTooLarge` if a level outgrows `level_cap`.
pub fn find_trivial_walk_exhaustive(
    group: &PermutationGroup,
    graph: &Graph,
    depth_cap: usize,
    level_cap: usize,
) -> Result<TrivialWalk> {
    check_setting(group, graph)?;
    let v = 0;
    let stab: Vec<_> = group.stabilizer_elements(&[v]).cloned().collect();
    let canonical = |walk: &Walk| stab.iter().map(|h| walk.image(h)).min().expect("identity is present");
    let mut level: Vec<Walk> = graph
        .neighbors(v)
        .iter()
        .map(|&w| Walk::new(graph, vec![v, w]))
        .collect::<Result<Vec<_>>>()?;
    level.retain(|w| is_consistent(group, w).is_some());
    level = level
        .iter()
        .map(&canonical)
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    for _ in 1..=depth_cap {
        if let Some(walk) = level.iter().find(|w| group.stabilizer_order(w.vertices()) == 1) {
            let walk = walk.clone();
            let certificate = certify_trivial_stabilizer(group, graph, &walk, Seed::Arc)?;
            let counts = (1..=walk.len())
                .map(|n| successor_count(group, &walk.prefix(n)))
                .collect::<Result<Vec<_>>>()?;
            // the certificate may fail to apply; the direct computation is what counts here
            return Ok(TrivialWalk {
                method: SearchMethod::Exhaustive,
                branch: None,
                wps: None,
                witness: witness_for(group, &walk)?,
                successor_counts: counts,
                certificate,
            });
        }
        let mut next = std::collections::BTreeSet::new();
        for walk in &level {
            for s in crate::walks::successors(group, walk)? {
                next.insert(canonical(&walk.extended(s.last())));
                if next.len() > level_cap {
                    return Err(Error::OrbitTooLarge { cap: level_cap });
                }
            }
        }
        level = next.into_iter().collect();
    }
    Err(Error::DepthExhausted(depth_cap))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternStatus {
    Matches,
    Mismatch,
    /// `t < 2`, where the predicted counts are not integers.
    OutOfPattern,
}

#[derive(Debug, Clone, Serialize)]
pub struct ShuntCountRow {
    pub length: usize,
    pub trivial: bool,
    pub shunt_count: usize,
}

/// Shunt counts of the four cycle orbits of a 4-valent graph against the predicted pattern.
#[derive(Debug, Clone, Serialize)]
pub struct ShuntPattern {
    pub stabilizer_order: usize,
    pub s: u32,
    pub t: u32,
    pub orbits: Vec<ShuntCountRow>,
    pub status: PatternStatus,
}

/// Compares shunt counts with `3^s 2^(t-2)` on trivial cycles, `1, 1` and `2^(t-2)` elsewhere.
pub fn verify_shunt_pattern(group: &PermutationGroup, graph: &Graph) -> Result<ShuntPattern> {
    match graph.valence() {
        Some(4) => {}
        _ => {
            return Err(Error::WrongValence {
                expected: 4,
                found: graph.degree(0),
            })
        }
    }
    check_setting(group, graph)?;
    let order = group.stabilizer_order(&[0]);
    let (mut rest, mut s, mut t) = (order, 0u32, 0u32);
    while rest % 3 == 0 {
        rest /= 3;
        s += 1;
    }
    while rest % 2 == 0 {
        rest /= 2;
        t += 1;
    }
    if rest != 1 {
        return Err(Error::BadStabilizerOrder(order));
    }
    let census = consistent_cycle_orbits(group, graph)?;
    let orbits: Vec<ShuntCountRow> = census
        .table
        .iter()
        .map(|r| ShuntCountRow {
            length: r.length,
            trivial: r.trivial,
            shunt_count: r.shunt_count,
        })
        .collect();
    let status = if t < 2 {
        PatternStatus::OutOfPattern
    } else {
        let unit = 1usize << (t - 2);
        let mut trivial: Vec<usize> = orbits.iter().filter(|r| r.trivial).map(|r| r.shunt_count).collect();
        let mut other: Vec<usize> = orbits.iter().filter(|r| !r.trivial).map(|r| r.shunt_count).collect();
        trivial.sort_unstable();
        other.sort_unstable();
        let mut expected_other = vec![1, 1, unit];
        expected_other.sort_unstable();
        if orbits.len() == 4 && trivial == [3usize.pow(s) * unit] && other == expected_other {
            PatternStatus::Matches
        } else {
            PatternStatus::Mismatch
        }
    };
    Ok(ShuntPattern {
        stabilizer_order: order,
        s,
        t,
        orbits,
        status,
    })
}

/// Multiset of shunt counts, for display.
pub fn shunt_count_histogram(pattern: &ShuntPattern) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for r in &pattern.orbits {
        *out.entry(r.shunt_count).or_insert(0) += 1;
    }
    out
}
