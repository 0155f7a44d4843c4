//! Finite groups as dense multiplication tables, built by closure from
//! generators, plus the structural subroutines used by the classifiers and
//! verifiers.
//!
//! After construction a group is always an immutable `|G| x |G|` table over
//! canonically ordered element indices (identity first, then BFS discovery
//! order in generator order). Permutations and matrices are construction-time
//! artifacts only.

use std::collections::HashMap;
use std::hash::Hash;

use thiserror::Error;

/// Default order cap for closure builders. Table memory is the binding
/// constraint; overridable per call and via `PSI_LAB_CAP` in the CLI.
pub const DEFAULT_CAP: usize = 2048;

/// Default order bound for normal-subgroup enumeration.
pub const DEFAULT_NORMAL_BOUND: usize = 200;

/// Orders up to which associativity is verified exhaustively at build time.
const EXHAUSTIVE_ASSOC_BOUND: usize = 256;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("closure exceeds order cap {cap}")]
    ClosureExceedsCap { cap: usize },
    #[error("images are not a bijection: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group order {order} exceeds enumeration bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },
    #[error("not a valid multiplication table: {0}")]
    BadTable(String),
    #[error("permutation parse error: {0}")]
    PermParse(String),
}

/// A permutation of `{0, .., d-1}`, stored as the image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self, GroupError> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &im in &images {
            if im >= d || seen[im] {
                return Err(GroupError::InvalidPermutation(images));
            }
            seen[im] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(degree: usize) -> Self {
        Perm { images: (0..degree).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// `self` then `other` (left-to-right composition).
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    /// Parses cycle notation `(0 2 3)(1 4)` or an image list `[2,0,1]`.
    /// Points absent from the cycles are fixed; `degree` sets the domain.
    pub fn parse(text: &str, degree: usize) -> Result<Self, GroupError> {
        let s = text.trim();
        if s.starts_with('[') {
            let inner = s
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| GroupError::PermParse(format!("unterminated image list: {s}")))?;
            let mut images = Vec::new();
            for part in inner.split(',') {
                let part = part.trim();
                let v: usize = part
                    .parse()
                    .map_err(|_| GroupError::PermParse(format!("bad image {part:?}")))?;
                images.push(v);
            }
            if images.len() != degree {
                return Err(GroupError::PermParse(format!(
                    "image list has length {}, expected degree {degree}",
                    images.len()
                )));
            }
            return Perm::new(images);
        }
        // Cycle notation.
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        let mut chars = s.chars().peekable();
        if s.is_empty() || s == "()" {
            return Ok(Perm::identity(degree));
        }
        while let Some(&c) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            if c != '(' {
                return Err(GroupError::PermParse(format!("expected '(' at {c:?}")));
            }
            chars.next();
            let mut cycle: Vec<usize> = Vec::new();
            let mut num = String::new();
            let mut closed = false;
            for c in chars.by_ref() {
                if c.is_ascii_digit() {
                    num.push(c);
                } else if c.is_whitespace() || c == ',' {
                    if !num.is_empty() {
                        cycle.push(num.parse().unwrap());
                        num.clear();
                    }
                } else if c == ')' {
                    if !num.is_empty() {
                        cycle.push(num.parse().unwrap());
                        num.clear();
                    }
                    closed = true;
                    break;
                } else {
                    return Err(GroupError::PermParse(format!("unexpected {c:?} in cycle")));
                }
            }
            if !closed {
                return Err(GroupError::PermParse(format!("unterminated cycle in {s:?}")));
            }
            for &pt in &cycle {
                if pt >= degree {
                    return Err(GroupError::PermParse(format!(
                        "point {pt} out of range for degree {degree}"
                    )));
                }
                if moved[pt] {
                    return Err(GroupError::PermParse(format!("point {pt} appears twice")));
                }
                moved[pt] = true;
            }
            for w in 0..cycle.len() {
                images[cycle[w]] = cycle[(w + 1) % cycle.len()];
            }
        }
        Perm::new(images)
    }

    /// Renders as cycle notation, `()` for the identity.
    pub fn to_cycles(&self) -> String {
        let mut seen = vec![false; self.degree()];
        let mut out = String::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&p.to_string());
                first = false;
                p = self.images[p];
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// A bitset over the element indices of a parent [`Group`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    words: Vec<u64>,
    universe: usize,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet { words: vec![0; universe.div_ceil(64)], universe }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn singleton(universe: usize, i: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(i);
        s
    }

    pub fn from_indices(universe: usize, indices: &[usize]) -> Self {
        let mut s = Self::empty(universe);
        for &i in indices {
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.universe);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&i| self.contains(i))
    }
}

/// An immutable finite group given by its full multiplication table.
///
/// Index 0 is the identity; `table[i][j]` is the index of `g_i * g_j`.
/// Element orders and inverses are cached at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    elem_order: Vec<u32>,
    label: String,
}

impl Group {
    /// Validates and wraps a raw table. Checks identity row/column, inverses,
    /// and associativity (exhaustively up to order 256, sampled above).
    pub fn from_table(order: usize, table: Vec<u32>, label: String) -> Result<Self, GroupError> {
        if order == 0 || table.len() != order * order {
            return Err(GroupError::BadTable(format!(
                "table of length {} for order {order}",
                table.len()
            )));
        }
        let mul = |i: usize, j: usize| table[i * order + j] as usize;
        for k in 0..order {
            if table[k * order + k] as usize >= order {
                return Err(GroupError::BadTable(format!("entry out of range at ({k},{k})")));
            }
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(GroupError::BadTable("entry out of range".into()));
        }
        for j in 0..order {
            if mul(0, j) != j || mul(j, 0) != j {
                return Err(GroupError::BadTable(format!("index 0 is not an identity at {j}")));
            }
        }
        let mut inverse = vec![u32::MAX; order];
        for i in 0..order {
            let mut found = false;
            for j in 0..order {
                if mul(i, j) == 0 {
                    if mul(j, i) != 0 {
                        return Err(GroupError::BadTable(format!("one-sided inverse at {i}")));
                    }
                    inverse[i] = j as u32;
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(GroupError::BadTable(format!("no inverse for {i}")));
            }
        }
        if order <= EXHAUSTIVE_ASSOC_BOUND {
            for i in 0..order {
                for j in 0..order {
                    let ij = mul(i, j);
                    for k in 0..order {
                        if mul(ij, k) != mul(i, mul(j, k)) {
                            return Err(GroupError::BadTable(format!(
                                "associativity fails at ({i},{j},{k})"
                            )));
                        }
                    }
                }
            }
        } else {
            // Sampled check: 10*|G| triples from a fixed-seed xorshift.
            let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
            let mut next = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state
            };
            for _ in 0..10 * order {
                let i = (next() % order as u64) as usize;
                let j = (next() % order as u64) as usize;
                let k = (next() % order as u64) as usize;
                if mul(mul(i, j), k) != mul(i, mul(j, k)) {
                    return Err(GroupError::BadTable(format!(
                        "associativity fails at sampled ({i},{j},{k})"
                    )));
                }
            }
        }
        let mut elem_order = vec![0u32; order];
        for i in 0..order {
            let mut k = 1u32;
            let mut p = i;
            while p != 0 {
                p = mul(p, i);
                k += 1;
            }
            elem_order[i] = k;
        }
        Ok(Group { order, table, inverse, elem_order, label })
    }

    /// Builds the closure of `gens` under `mul_fn`, starting from `identity`,
    /// in BFS discovery order. The element type is arbitrary; only the table
    /// survives.
    pub fn close_with<T, F>(
        identity: T,
        gens: &[T],
        mul_fn: F,
        cap: usize,
        label: String,
    ) -> Result<Self, GroupError>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elements: Vec<T> = vec![identity];
        let mut index: HashMap<T, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut head = 0;
        while head < elements.len() {
            for g in gens {
                let prod = mul_fn(&elements[head], g);
                if !index.contains_key(&prod) {
                    if elements.len() >= cap {
                        return Err(GroupError::ClosureExceedsCap { cap });
                    }
                    index.insert(prod.clone(), elements.len());
                    elements.push(prod);
                }
            }
            head += 1;
        }
        let order = elements.len();
        let mut table = vec![0u32; order * order];
        for i in 0..order {
            for j in 0..order {
                let prod = mul_fn(&elements[i], &elements[j]);
                let k = *index
                    .get(&prod)
                    .ok_or_else(|| GroupError::BadTable("closure not closed".into()))?;
                table[i * order + j] = k as u32;
            }
        }
        Group::from_table(order, table, label)
    }

    pub fn build_from_perms(gens: &[Perm], cap: usize) -> Result<Self, GroupError> {
        let degree = match gens.first() {
            Some(g) => g.degree(),
            None => return Group::from_table(1, vec![0], "trivial".into()),
        };
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(GroupError::PermParse("generators have mixed degrees".into()));
        }
        Group::close_with(
            Perm::identity(degree),
            gens,
            |a, b| a.compose(b),
            cap,
            format!("perm-group(degree {degree})"),
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j] as usize
    }

    pub fn inverse_of(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    /// Smallest `k >= 1` with `g_i^k = identity`, from the build-time cache.
    pub fn element_order(&self, i: usize) -> Result<u32, GroupError> {
        self.elem_order
            .get(i)
            .copied()
            .ok_or(GroupError::IndexOutOfRange { index: i, order: self.order })
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.elem_order
    }

    /// Sorted multiset of element orders; a cheap isomorphism invariant.
    pub fn order_multiset(&self) -> Vec<u32> {
        let mut v = self.elem_order.clone();
        v.sort_unstable();
        v
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        // g^-1 x g
        self.mul(self.mul(self.inverse_of(g), x), g)
    }

    /// Smallest subgroup containing `seed`.
    pub fn subgroup_closure(&self, seed: &ElementSet) -> ElementSet {
        let mut set = seed.clone();
        set.insert(0);
        let mut frontier: Vec<usize> = set.iter().collect();
        while let Some(x) = frontier.pop() {
            let inv = self.inverse_of(x);
            if !set.contains(inv) {
                set.insert(inv);
                frontier.push(inv);
            }
            let members: Vec<usize> = set.iter().collect();
            for &y in &members {
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if !set.contains(p) {
                        set.insert(p);
                        frontier.push(p);
                    }
                }
            }
        }
        set
    }

    pub fn is_subgroup(&self, s: &ElementSet) -> bool {
        if !s.contains(0) {
            return false;
        }
        let members: Vec<usize> = s.iter().collect();
        members.iter().all(|&x| members.iter().all(|&y| s.contains(self.mul(x, y))))
    }

    pub fn is_normal(&self, s: &ElementSet) -> Result<bool, GroupError> {
        if !self.is_subgroup(s) {
            return Err(GroupError::NotASubgroup);
        }
        for g in 0..self.order {
            for x in s.iter() {
                if !s.contains(self.conjugate(g, x)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// All `g` commuting with every element of `s`; always a subgroup.
    pub fn centralizer(&self, s: &ElementSet) -> ElementSet {
        let members: Vec<usize> = s.iter().collect();
        let mut out = ElementSet::empty(self.order);
        for g in 0..self.order {
            if members.iter().all(|&x| self.mul(g, x) == self.mul(x, g)) {
                out.insert(g);
            }
        }
        out
    }

    pub fn center(&self) -> ElementSet {
        self.centralizer(&ElementSet::full(self.order))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Closure of all commutators `[g,h] = g^-1 h^-1 g h`.
    pub fn commutator_subgroup(&self) -> ElementSet {
        let mut comms = ElementSet::empty(self.order);
        comms.insert(0);
        for g in 0..self.order {
            let gi = self.inverse_of(g);
            for h in 0..self.order {
                let c = self.mul(self.mul(self.mul(gi, self.inverse_of(h)), g), h);
                comms.insert(c);
            }
        }
        self.subgroup_closure(&comms)
    }

    /// Conjugation orbits, ordered by smallest member; the identity class
    /// comes first.
    pub fn conjugacy_classes(&self) -> Vec<ElementSet> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for i in 0..self.order {
            if seen[i] {
                continue;
            }
            let mut class = ElementSet::empty(self.order);
            for g in 0..self.order {
                let c = self.conjugate(g, i);
                class.insert(c);
                seen[c] = true;
            }
            classes.push(class);
        }
        classes
    }

    pub fn normal_subgroups(&self) -> Result<Vec<ElementSet>, GroupError> {
        self.normal_subgroups_bounded(DEFAULT_NORMAL_BOUND)
    }

    /// All normal subgroups, as multiplicatively closed unions of conjugacy
    /// classes: starting from the trivial subgroup, each discovered subgroup
    /// is joined with each class and closed, to a fixpoint.
    pub fn normal_subgroups_bounded(&self, bound: usize) -> Result<Vec<ElementSet>, GroupError> {
        if self.order > bound {
            return Err(GroupError::OrderBoundExceeded { order: self.order, bound });
        }
        let classes = self.conjugacy_classes();
        let trivial = ElementSet::singleton(self.order, 0);
        let mut found: Vec<ElementSet> = vec![trivial.clone()];
        let mut seen: std::collections::HashSet<ElementSet> =
            found.iter().cloned().collect();
        let mut frontier = vec![trivial];
        while let Some(n) = frontier.pop() {
            for class in &classes {
                if class.is_subset_of(&n) {
                    continue;
                }
                let mut seed = n.clone();
                seed.union_with(class);
                let joined = self.subgroup_closure(&seed);
                if seen.insert(joined.clone()) {
                    found.push(joined.clone());
                    frontier.push(joined);
                }
            }
        }
        found.sort_by_key(|s| (s.len(), s.iter().collect::<Vec<_>>()));
        Ok(found)
    }

    /// `Core_G(A)`: intersection of all conjugates of `A`, the largest normal
    /// subgroup of `G` inside `A`.
    pub fn core_of(&self, a: &ElementSet) -> Result<ElementSet, GroupError> {
        if !self.is_subgroup(a) {
            return Err(GroupError::NotASubgroup);
        }
        let mut core = a.clone();
        for g in 0..self.order {
            let mut conj = ElementSet::empty(self.order);
            for x in a.iter() {
                conj.insert(self.conjugate(g, x));
            }
            core.intersect_with(&conj);
        }
        Ok(core)
    }

    /// Quotient by a normal subgroup; cosets are indexed in order of first
    /// appearance, so the identity coset is index 0.
    pub fn quotient(&self, n: &ElementSet) -> Result<Group, GroupError> {
        if !self.is_normal(n)? {
            return Err(GroupError::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps: Vec<usize> = Vec::new();
        for i in 0..self.order {
            if coset_of[i] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(i);
            for s in n.iter() {
                coset_of[self.mul(i, s)] = id;
            }
        }
        let q = reps.len();
        let mut table = vec![0u32; q * q];
        for (a, &ra) in reps.iter().enumerate() {
            for (b, &rb) in reps.iter().enumerate() {
                table[a * q + b] = coset_of[self.mul(ra, rb)] as u32;
            }
        }
        Group::from_table(q, table, format!("{}/N{}", self.label, n.len()))
    }

    pub fn direct_product(&self, other: &Group, cap: usize) -> Result<Group, GroupError> {
        let n = self.order * other.order;
        if n > cap {
            return Err(GroupError::ClosureExceedsCap { cap });
        }
        let m = other.order;
        let mut table = vec![0u32; n * n];
        for i1 in 0..self.order {
            for j1 in 0..m {
                let a = i1 * m + j1;
                for i2 in 0..self.order {
                    for j2 in 0..m {
                        let b = i2 * m + j2;
                        table[a * n + b] = (self.mul(i1, i2) * m + other.mul(j1, j2)) as u32;
                    }
                }
            }
        }
        Group::from_table(n, table, format!("X({},{})", self.label, other.label))
    }

    /// Distinct subgroups of the form `<x>`.
    pub fn cyclic_subgroups(&self) -> Vec<ElementSet> {
        let mut seen: std::collections::HashSet<ElementSet> = std::collections::HashSet::new();
        let mut out = Vec::new();
        for x in 0..self.order {
            let mut s = ElementSet::empty(self.order);
            let mut p = 0;
            loop {
                s.insert(p);
                p = self.mul(p, x);
                if p == 0 {
                    break;
                }
            }
            if seen.insert(s.clone()) {
                out.push(s);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Group {
        let a = Perm::parse("(0 1 2)", 3).unwrap();
        let b = Perm::parse("(0 1)", 3).unwrap();
        Group::build_from_perms(&[a, b], 64).unwrap()
    }

    fn a5() -> Group {
        let a = Perm::parse("(0 1 2 3 4)", 5).unwrap();
        let b = Perm::parse("(0 1 2)", 5).unwrap();
        Group::build_from_perms(&[a, b], 128).unwrap()
    }

    fn q8() -> Group {
        // x^4 = 1, y^2 = x^2, yxy^-1 = x^-1, elements x^a y^b with b in {0,1}.
        let mul = |p: &(u8, u8), q: &(u8, u8)| {
            let (a, b) = *p;
            let (c, d) = *q;
            match (b, d) {
                (0, _) => ((a + c) % 4, d),
                (1, 0) => ((4 + a - c) % 4, 1),
                (1, 1) => ((6 + a - c) % 4, 0),
                _ => unreachable!(),
            }
        };
        Group::close_with((0u8, 0u8), &[(1, 0), (0, 1)], mul, 16, "Q(8)".into()).unwrap()
    }

    #[test]
    fn closure_examples() {
        let c3 = Group::build_from_perms(&[Perm::parse("(0 1 2)", 3).unwrap()], 8).unwrap();
        assert_eq!(c3.order(), 3);
        assert_eq!(s3().order(), 6);
        assert_eq!(a5().order(), 60);
    }

    #[test]
    fn closure_cap() {
        let gens = [Perm::parse("(0 1 2 3 4)", 5).unwrap(), Perm::parse("(0 1 2)", 5).unwrap()];
        assert_eq!(
            Group::build_from_perms(&gens, 10).unwrap_err(),
            GroupError::ClosureExceedsCap { cap: 10 }
        );
    }

    #[test]
    fn invalid_permutation() {
        assert!(matches!(Perm::new(vec![0, 0, 1]), Err(GroupError::InvalidPermutation(_))));
    }

    #[test]
    fn element_orders() {
        let g = s3();
        assert_eq!(g.element_order(0).unwrap(), 1);
        let mut orders = g.order_multiset();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 3]);
        assert!(matches!(g.element_order(6), Err(GroupError::IndexOutOfRange { .. })));
        for &o in a5().element_orders() {
            assert!(o == 1 || [2, 3, 5].contains(&o));
        }
    }

    #[test]
    fn subgroup_closure_examples() {
        let g = s3();
        let id = ElementSet::singleton(6, 0);
        assert_eq!(g.subgroup_closure(&id).len(), 1);
        let three_cycle = (0..6).find(|&i| g.element_order(i).unwrap() == 3).unwrap();
        let sub = g.subgroup_closure(&ElementSet::singleton(6, three_cycle));
        assert_eq!(sub.len(), 3);
        let transpositions: Vec<usize> =
            (0..6).filter(|&i| g.element_order(i).unwrap() == 2).collect();
        let two = ElementSet::from_indices(6, &transpositions[..2]);
        assert_eq!(g.subgroup_closure(&two).len(), 6);
    }

    #[test]
    fn normality() {
        let g = s3();
        assert!(g.is_normal(&ElementSet::full(6)).unwrap());
        let three_cycle = (0..6).find(|&i| g.element_order(i).unwrap() == 3).unwrap();
        let rot = g.subgroup_closure(&ElementSet::singleton(6, three_cycle));
        assert!(g.is_normal(&rot).unwrap());
        let t = (0..6).find(|&i| g.element_order(i).unwrap() == 2).unwrap();
        let refl = g.subgroup_closure(&ElementSet::singleton(6, t));
        assert!(!g.is_normal(&refl).unwrap());
        assert_eq!(g.is_normal(&ElementSet::from_indices(6, &[0, t, 1])), Err(GroupError::NotASubgroup));
    }

    #[test]
    fn centralizer_and_center() {
        let g = s3();
        assert_eq!(g.centralizer(&ElementSet::singleton(6, 0)).len(), 6);
        let three_cycle = (0..6).find(|&i| g.element_order(i).unwrap() == 3).unwrap();
        let rot = g.subgroup_closure(&ElementSet::singleton(6, three_cycle));
        assert_eq!(g.centralizer(&rot), rot);
        assert_eq!(g.center().len(), 1);
        assert_eq!(q8().center().len(), 2);
        let c4 = Group::close_with(0u8, &[1], |a, b| (a + b) % 4, 8, "C(4)".into()).unwrap();
        assert_eq!(c4.center().len(), 4);
    }

    #[test]
    fn commutator_examples() {
        let c4 = Group::close_with(0u8, &[1], |a, b| (a + b) % 4, 8, "C(4)".into()).unwrap();
        assert_eq!(c4.commutator_subgroup().len(), 1);
        assert_eq!(s3().commutator_subgroup().len(), 3);
        assert_eq!(a5().commutator_subgroup().len(), 60);
    }

    #[test]
    fn conjugacy_class_sizes() {
        let mut sizes: Vec<usize> = s3().conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        let mut sizes: Vec<usize> = q8().conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn normal_subgroup_enumeration() {
        let c5 = Group::close_with(0u8, &[1], |a, b| (a + b) % 5, 8, "C(5)".into()).unwrap();
        assert_eq!(c5.normal_subgroups().unwrap().len(), 2);
        assert_eq!(s3().normal_subgroups().unwrap().len(), 3);
        let q = q8();
        let normals = q.normal_subgroups().unwrap();
        assert_eq!(normals.len(), 6);
        let mut sizes: Vec<usize> = normals.iter().map(|s| s.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 4, 4, 4, 8]);
        assert!(matches!(
            Group::close_with(0u16, &[1], |a, b| (a + b) % 300, 512, "C(300)".into())
                .unwrap()
                .normal_subgroups(),
            Err(GroupError::OrderBoundExceeded { .. })
        ));
    }

    /// Brute-force cross-check: normal subgroups are exactly the subgroup
    /// closures of <= 2 generators, joined iteratively, that pass is_normal.
    #[test]
    fn normal_subgroups_cross_check() {
        for g in [s3(), q8()] {
            let n = g.order();
            let mut subs: std::collections::HashSet<ElementSet> = std::collections::HashSet::new();
            for i in 0..n {
                for j in 0..n {
                    subs.insert(g.subgroup_closure(&ElementSet::from_indices(n, &[i, j])));
                }
            }
            // Join iteratively to catch subgroups needing more generators.
            loop {
                let cur: Vec<ElementSet> = subs.iter().cloned().collect();
                let before = subs.len();
                for a in &cur {
                    for b in &cur {
                        let mut seed = a.clone();
                        seed.union_with(b);
                        subs.insert(g.subgroup_closure(&seed));
                    }
                }
                if subs.len() == before {
                    break;
                }
            }
            let mut brute: Vec<ElementSet> =
                subs.into_iter().filter(|s| g.is_normal(s).unwrap()).collect();
            brute.sort_by_key(|s| (s.len(), s.iter().collect::<Vec<_>>()));
            assert_eq!(brute, g.normal_subgroups().unwrap());
        }
    }

    #[test]
    fn core_examples() {
        let g = s3();
        let t = (0..6).find(|&i| g.element_order(i).unwrap() == 2).unwrap();
        let refl = g.subgroup_closure(&ElementSet::singleton(6, t));
        assert_eq!(g.core_of(&refl).unwrap().len(), 1);
        let three_cycle = (0..6).find(|&i| g.element_order(i).unwrap() == 3).unwrap();
        let rot = g.subgroup_closure(&ElementSet::singleton(6, three_cycle));
        assert_eq!(g.core_of(&rot).unwrap(), rot);
    }

    #[test]
    fn quotient_examples() {
        let q = q8();
        let z = q.center();
        let v4 = q.quotient(&z).unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.order_multiset(), vec![1, 2, 2, 2]);
        let triv = q.quotient(&ElementSet::full(8)).unwrap();
        assert_eq!(triv.order(), 1);
        let copy = q.quotient(&ElementSet::singleton(8, 0)).unwrap();
        assert_eq!(copy.order_multiset(), q.order_multiset());
        let g = s3();
        let t = (0..6).find(|&i| g.element_order(i).unwrap() == 2).unwrap();
        let refl = g.subgroup_closure(&ElementSet::singleton(6, t));
        assert_eq!(g.quotient(&refl), Err(GroupError::NotNormal));
    }

    #[test]
    fn direct_product_examples() {
        let c2 = Group::close_with(0u8, &[1], |a, b| (a + b) % 2, 4, "C(2)".into()).unwrap();
        let c3 = Group::close_with(0u8, &[1], |a, b| (a + b) % 3, 4, "C(3)".into()).unwrap();
        let v4 = c2.direct_product(&c2, 16).unwrap();
        assert_eq!(v4.order_multiset(), vec![1, 2, 2, 2]);
        let c6 = c2.direct_product(&c3, 16).unwrap();
        assert_eq!(c6.order_multiset(), vec![1, 2, 3, 3, 6, 6]);
        let triv = Group::from_table(1, vec![0], "C(1)".into()).unwrap();
        assert_eq!(c3.direct_product(&triv, 16).unwrap().order_multiset(), c3.order_multiset());
        assert!(c2.direct_product(&c3, 5).is_err());
    }

    #[test]
    fn cyclic_subgroup_enumeration() {
        let c5 = Group::close_with(0u8, &[1], |a, b| (a + b) % 5, 8, "C(5)".into()).unwrap();
        assert_eq!(c5.cyclic_subgroups().len(), 2);
        let c2 = Group::close_with(0u8, &[1], |a, b| (a + b) % 2, 4, "C(2)".into()).unwrap();
        let v4 = c2.direct_product(&c2, 8).unwrap();
        assert_eq!(v4.cyclic_subgroups().len(), 4);
        assert_eq!(s3().cyclic_subgroups().len(), 5);
    }

    #[test]
    fn lagrange_invariants() {
        for g in [s3(), q8(), a5()] {
            for i in 0..g.order() {
                assert_eq!(g.order() % g.element_order(i).unwrap() as usize, 0);
                assert_eq!(g.mul(i, g.inverse_of(i)), 0);
            }
            for class in g.conjugacy_classes() {
                assert_eq!(g.order() % class.len(), 0);
            }
        }
    }

    #[test]
    fn perm_cycle_roundtrip() {
        let p = Perm::parse("(0 2 3)(1 4)", 5).unwrap();
        assert_eq!(p.images(), &[2, 4, 3, 0, 1]);
        assert_eq!(Perm::parse(&p.to_cycles(), 5).unwrap(), p);
        let q = Perm::parse("[2,0,1]", 3).unwrap();
        assert_eq!(q.images(), &[2, 0, 1]);
        assert!(Perm::parse("(0 1", 3).is_err());
        assert!(Perm::parse("(0 7)", 3).is_err());
    }
}
