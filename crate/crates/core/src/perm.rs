//! Finite permutation groups, fully materialized.
//!
//! Permutations act on the right: `p.apply(i)` is `i^p`, and `&p * &q` is the
//! permutation that applies `p` first and then `q`, so `i^(pq) = (i^p)^q`.
//! Conjugation follows the same convention, `g^x = x⁻¹ g x`.
//!
//! Groups are stored as their complete element list, produced by breadth-first
//! closure of the generators. This trades memory for simplicity: every
//! stabilizer, coset and orbit question becomes a filter over the element list.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Default ceiling on the number of materialized group elements.
pub const DEFAULT_GROUP_CAP: usize = 2_000_000;

/// A bijection of `{0, .., n-1}` stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its images, rejecting anything that is not a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &i in &images {
            if i >= degree || seen[i] {
                return Err(Error::InvalidPermutation { degree });
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    ///
    /// ```
    /// use conwalk::Permutation;
    /// let p = Permutation::from_cycles(4, &[&[0, 1, 2]]).unwrap();
    /// assert_eq!(p.to_vec(), vec![1, 2, 0, 3]);
    /// ```
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree || touched[a] {
                    return Err(Error::InvalidPermutation { degree });
                }
                touched[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(degree);
        p.images.swap(a, b);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `p` then `q`, checking degrees.
    pub fn compose(&self, q: &Permutation) -> Result<Self> {
        if self.degree() != q.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: q.degree(),
            });
        }
        Ok(self * q)
    }

    /// `x⁻¹ · self · x`, the image of `self` under conjugation by `x`.
    pub fn conjugate_by(&self, x: &Permutation) -> Self {
        &(&x.inverse() * self) * x
    }

    pub fn apply_tuple(&self, tuple: &[usize]) -> Vec<usize> {
        tuple.iter().map(|&v| self.apply(v)).collect()
    }

    pub fn fixes_all(&self, points: &[usize]) -> bool {
        points.iter().all(|&v| self.apply(v) == v)
    }

    /// True when `from[i]^self == to[i]` for every `i`.
    pub fn maps_tuple(&self, from: &[usize], to: &[usize]) -> bool {
        from.len() == to.len() && from.iter().zip(to).all(|(&a, &b)| self.apply(a) == b)
    }

    /// Element order: the lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut order = 1usize;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.apply(p);
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl Mul<&Permutation> for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), rhs.degree());
        Permutation {
            images: self.images.iter().map(|&i| rhs.images[i as usize]).collect(),
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(d)?;
        Permutation::from_images(images).map_err(serde::de::Error::custom)
    }
}

/// Wire form of a group: its degree and a generator list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupSpec {
    pub fn close(&self, cap: usize) -> Result<PermutationGroup> {
        PermutationGroup::close(self.degree, self.generators.clone(), cap)
    }
}

/// Budget for [`PermutationGroup::min_generating_size`].
#[derive(Debug, Clone, Copy)]
pub struct GeneratingSearch {
    /// Largest generating-set size tried.
    pub max_size: usize,
    /// Number of subgroup closures allowed before giving up.
    pub max_closures: usize,
}

impl Default for GeneratingSearch {
    fn default() -> Self {
        GeneratingSearch {
            max_size: 4,
            max_closures: 50_000,
        }
    }
}

/// A finite permutation group with every element materialized.
#[derive(Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermutationGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Breadth-first closure of `generators`, identity first.
fn close_elements(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<(Vec<Permutation>, HashMap<Permutation, usize>)> {
    let id = Permutation::identity(degree);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0)]);
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for s in generators {
            let y = &x * s;
            if !index.contains_key(&y) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
    }
    Ok((elements, index))
}

/// Order of `⟨generators⟩` without keeping the element list around.
fn closure_order(degree: usize, generators: &[Permutation]) -> usize {
    close_elements(degree, generators, usize::MAX)
        .map(|(e, _)| e.len())
        .unwrap_or(usize::MAX)
}

/// Orbit of `point` under `⟨generators⟩`, sorted; no closure is built.
pub fn generated_orbit(generators: &[Permutation], point: usize, degree: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[point] = true;
    let mut stack = vec![point];
    let mut orbit = vec![point];
    while let Some(p) = stack.pop() {
        for s in generators {
            let q = s.apply(p);
            if !seen[q] {
                seen[q] = true;
                orbit.push(q);
                stack.push(q);
            }
        }
    }
    orbit.sort_unstable();
    orbit
}

/// Orbit of a tuple under `⟨generators⟩` acting componentwise, sorted.
pub fn generated_tuple_orbit(generators: &[Permutation], tuple: &[usize]) -> Vec<Vec<usize>> {
    let mut seen: HashSet<Vec<usize>> = HashSet::from([tuple.to_vec()]);
    let mut stack = vec![tuple.to_vec()];
    while let Some(t) = stack.pop() {
        for s in generators {
            let u = s.apply_tuple(&t);
            if seen.insert(u.clone()) {
                stack.push(u);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

impl PermutationGroup {
    /// Closes `generators` under composition. Fails once the closure passes `cap`.
    ///
    /// ```
    /// use conwalk::{Permutation, PermutationGroup};
    /// let rot = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
    /// let refl = Permutation::from_cycles(4, &[&[1, 3]]).unwrap();
    /// let d4 = PermutationGroup::close(4, vec![rot, refl], 1000).unwrap();
    /// assert_eq!(d4.order(), 8);
    /// ```
    pub fn close(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        assert!(cap >= 1, "closure cap must be positive");
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let (elements, index) = close_elements(degree, &generators, cap)?;
        Ok(PermutationGroup {
            degree,
            generators,
            elements,
            index,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::close(degree, Vec::new(), 1).expect("trivial group fits any cap")
    }

    /// Wraps an element list already known to be a group, choosing a small
    /// generating set greedily in element order.
    pub(crate) fn from_closed_elements(degree: usize, elements: Vec<Permutation>) -> Self {
        let mut generators: Vec<Permutation> = Vec::new();
        let mut covered: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
        for e in &elements {
            if !covered.contains(e) {
                generators.push(e.clone());
                let (sub, _) = close_elements(degree, &generators, usize::MAX).expect("uncapped closure cannot fail");
                covered = sub.into_iter().collect();
            }
        }
        debug_assert_eq!(covered.len(), elements.len());
        let mut elements = elements;
        // identity first, then original order
        if let Some(pos) = elements.iter().position(Permutation::is_identity) {
            let id = elements.remove(pos);
            elements.insert(0, id);
        }
        let index = elements.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        PermutationGroup {
            degree,
            generators,
            elements,
            index,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn spec(&self) -> GroupSpec {
        GroupSpec {
            degree: self.degree,
            generators: self.generators.clone(),
        }
    }

    /// The subgroup generated by `gens`, which must be elements of `self`.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<PermutationGroup> {
        for g in &gens {
            if !self.contains(g) {
                return Err(Error::Invariant("subgroup generator outside the group".into()));
            }
        }
        PermutationGroup::close(self.degree, gens, self.order())
    }

    /// Orbit of `point`, sorted.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut queue = VecDeque::from([point]);
        let mut orbit = vec![point];
        while let Some(p) = queue.pop_front() {
            for s in &self.generators {
                let q = s.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                    queue.push_back(q);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    /// All orbits on points, each sorted, ordered by smallest member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if !seen[p] {
                let orbit = self.orbit(p);
                for &q in &orbit {
                    seen[q] = true;
                }
                out.push(orbit);
            }
        }
        out
    }

    /// Orbit of a tuple under the componentwise action, in discovery order.
    pub fn tuple_orbit(&self, tuple: &[usize]) -> Vec<Vec<usize>> {
        let mut seen: HashSet<Vec<usize>> = HashSet::from([tuple.to_vec()]);
        let mut out = vec![tuple.to_vec()];
        let mut head = 0;
        while head < out.len() {
            let t = out[head].clone();
            head += 1;
            for s in &self.generators {
                let u = s.apply_tuple(&t);
                if seen.insert(u.clone()) {
                    out.push(u);
                }
            }
        }
        out
    }

    /// Elements fixing every point of `tuple`, in element order.
    pub fn stabilizer_elements<'a>(&'a self, tuple: &'a [usize]) -> impl Iterator<Item = &'a Permutation> + 'a {
        self.elements.iter().filter(move |g| g.fixes_all(tuple))
    }

    pub fn stabilizer_order(&self, tuple: &[usize]) -> usize {
        self.stabilizer_elements(tuple).count()
    }

    /// The pointwise stabilizer `G_(t)`; the empty tuple gives the group itself.
    pub fn pointwise_stabilizer(&self, tuple: &[usize]) -> PermutationGroup {
        if tuple.is_empty() {
            return self.clone();
        }
        let elements = self.stabilizer_elements(tuple).cloned().collect();
        PermutationGroup::from_closed_elements(self.degree, elements)
    }

    /// Elements mapping `from` onto `to` componentwise.
    pub fn transporters<'a>(
        &'a self,
        from: &'a [usize],
        to: &'a [usize],
    ) -> impl Iterator<Item = &'a Permutation> + 'a {
        self.elements.iter().filter(move |g| g.maps_tuple(from, to))
    }

    /// Whether the group is transitive on `domain`, which must be invariant.
    pub fn is_transitive(&self, domain: &[usize]) -> Result<bool> {
        let members: HashSet<usize> = domain.iter().copied().collect();
        for s in &self.generators {
            for &p in domain {
                if !members.contains(&s.apply(p)) {
                    return Err(Error::DomainNotInvariant { point: p });
                }
            }
        }
        let Some(&first) = domain.first() else {
            return Ok(false);
        };
        Ok(self.orbit(first).len() == members.len())
    }

    /// Element-set equality, via orders and mutual generator membership.
    pub fn subgroup_equals(&self, other: &PermutationGroup) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && self.generators.iter().all(|g| other.contains(g))
            && other.generators.iter().all(|g| self.contains(g))
    }

    /// One representative per conjugacy class, in element order.
    pub fn conjugacy_class_reps(&self) -> Vec<Permutation> {
        let mut assigned = vec![false; self.order()];
        let inverses: Vec<Permutation> = self.generators.iter().map(Permutation::inverse).collect();
        let mut reps = Vec::new();
        for (i, x) in self.elements.iter().enumerate() {
            if assigned[i] {
                continue;
            }
            reps.push(x.clone());
            assigned[i] = true;
            let mut queue = vec![x.clone()];
            while let Some(y) = queue.pop() {
                for (s, s_inv) in self.generators.iter().zip(&inverses) {
                    let z = &(s_inv * &y) * s;
                    let j = self.index[&z];
                    if !assigned[j] {
                        assigned[j] = true;
                        queue.push(z);
                    }
                }
            }
        }
        reps
    }

    /// Smallest size of a generating set, searched exhaustively.
    ///
    /// Subsets of increasing size are tried; the first member of each subset
    /// ranges over conjugacy-class representatives only, which loses nothing
    /// because conjugating a generating set gives a generating set. Returns
    /// `None` when the budget runs out before the answer is settled.
    pub fn min_generating_size(&self, search: GeneratingSearch) -> Option<usize> {
        let n = self.order();
        if n == 1 {
            return Some(0);
        }
        if self.elements.iter().any(|g| g.order() == n) {
            return Some(1);
        }
        let reps = self.conjugacy_class_reps();
        let others: Vec<&Permutation> = self.elements.iter().filter(|g| !g.is_identity()).collect();
        let mut budget = search.max_closures;
        for size in 2..=search.max_size {
            for rep in reps.iter().filter(|r| !r.is_identity()) {
                let mut chosen = vec![rep.clone()];
                match self.extend_generating(&mut chosen, &others, 0, size, &mut budget) {
                    Some(true) => return Some(size),
                    Some(false) => {}
                    None => return None,
                }
            }
        }
        None
    }

    /// Depth-first search over index-increasing completions of `chosen`.
    /// `None` means the closure budget ran out.
    fn extend_generating(
        &self,
        chosen: &mut Vec<Permutation>,
        pool: &[&Permutation],
        from: usize,
        size: usize,
        budget: &mut usize,
    ) -> Option<bool> {
        if chosen.len() == size {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            return Some(closure_order(self.degree, chosen) == self.order());
        }
        for i in from..pool.len() {
            if chosen.contains(pool[i]) {
                continue;
            }
            chosen.push(pool[i].clone());
            let found = self.extend_generating(chosen, pool, i + 1, size, budget);
            chosen.pop();
            match found {
                Some(false) => {}
                other => return other,
            }
        }
        Some(false)
    }

    /// Checks closure under composition and inverses and presence of the identity.
    pub fn check_closed(&self) -> bool {
        self.contains(&Permutation::identity(self.degree))
            && self.elements.iter().all(|x| self.contains(&x.inverse()))
            && self
                .elements
                .iter()
                .all(|x| self.generators.iter().all(|s| self.contains(&(x * s))))
    }
}

impl Serialize for PermutationGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.spec().serialize(s)
    }
}
