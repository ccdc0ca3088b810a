//! Finite posets with a least element and the order-theoretic primitives the
//! zero-divisor machinery is built on.

use std::collections::HashSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest poset any operation accepts.
pub const MAX_POSET_ELEMENTS: usize = 4096;

/// A set of element indices into some poset (or vertex indices into a graph).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: FixedBitSet,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        Self { bits }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(
        universe: usize,
        indices: I,
    ) -> Result<Self> {
        let mut bits = FixedBitSet::with_capacity(universe);
        for i in indices {
            if i >= universe {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    len: universe,
                });
            }
            bits.insert(i);
        }
        Ok(Self { bits })
    }

    pub(crate) fn from_bits(bits: FixedBitSet) -> Self {
        Self { bits }
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    pub fn insert(&mut self, i: usize) {
        self.bits.insert(i);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Members in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn as_bits(&self) -> &FixedBitSet {
        &self.bits
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Outcome of the Boolean-lattice test. Non-lattices get their own answer
/// instead of a plain `false`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BooleanCheck {
    Boolean,
    NotBoolean,
    NotALattice,
}

/// On-disk poset format: elements plus a generating cover relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub name: String,
    pub elements: Vec<String>,
    pub covers: Vec<[usize; 2]>,
}

/// A finite poset with a mandatory least element. The full order relation is
/// stored both as up-sets and down-sets.
#[derive(Clone, PartialEq, Eq)]
pub struct FinitePoset {
    name: String,
    labels: Vec<String>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    zero: usize,
    one: Option<usize>,
}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinitePoset")
            .field("name", &self.name)
            .field("labels", &self.labels)
            .field("covers", &self.covers())
            .finish()
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_POSET_ELEMENTS {
        return Err(Error::TooLarge {
            size: n,
            limit: MAX_POSET_ELEMENTS,
        });
    }
    Ok(())
}

fn check_labels(labels: &[String]) -> Result<()> {
    let mut seen = HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

impl FinitePoset {
    /// Builds a poset from a generating cover relation: computes the
    /// reflexive-transitive closure and rejects cycles.
    pub fn from_covers(
        name: impl Into<String>,
        labels: Vec<String>,
        covers: &[(usize, usize)],
    ) -> Result<Self> {
        let n = labels.len();
        check_size(n)?;
        check_labels(&labels)?;
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(lo, hi) in covers {
            for i in [lo, hi] {
                if i >= n {
                    return Err(Error::IndexOutOfRange { index: i, len: n });
                }
            }
            if lo == hi {
                return Err(Error::SelfCover(lo));
            }
            succ[lo].push(hi);
            indeg[hi] += 1;
        }
        // Kahn order; anything left over sits on a cycle.
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).rev().filter(|&i| indeg[i] == 0).collect();
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        if order.len() < n {
            let culprit = (0..n).find(|&i| indeg[i] > 0).unwrap_or(0);
            return Err(Error::CoverCycle(culprit));
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &v in order.iter().rev() {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(v);
            for &w in &succ[v] {
                row.union_with(&up[w]);
            }
            up[v] = row;
        }
        Self::from_up_sets(name.into(), labels, up)
    }

    /// Builds a poset from an order predicate. The predicate must describe a
    /// partial order; this is checked.
    pub fn from_relation<F>(name: impl Into<String>, labels: Vec<String>, le: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = labels.len();
        check_size(n)?;
        check_labels(&labels)?;
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter_mut().enumerate() {
            for j in 0..n {
                if le(i, j) {
                    row.insert(j);
                }
            }
        }
        let p = Self::from_up_sets(name.into(), labels, up)?;
        p.validate_order()?;
        Ok(p)
    }

    fn from_up_sets(name: String, labels: Vec<String>, up: Vec<FixedBitSet>) -> Result<Self> {
        let n = labels.len();
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter().enumerate() {
            for j in row.ones() {
                down[j].insert(i);
            }
        }
        let zero = (0..n)
            .find(|&i| up[i].count_ones(..) == n)
            .ok_or(Error::MissingLeastElement)?;
        let one = (0..n).find(|&i| down[i].count_ones(..) == n);
        Ok(Self {
            name,
            labels,
            up,
            down,
            zero,
            one,
        })
    }

    /// Checks reflexivity, antisymmetry and transitivity of the stored relation.
    pub fn validate_order(&self) -> Result<()> {
        let n = self.len();
        for i in 0..n {
            if !self.up[i].contains(i) {
                return Err(Error::InvalidArgument(format!(
                    "relation not reflexive at {i}"
                )));
            }
            for j in self.up[i].ones() {
                if j != i && self.up[j].contains(i) {
                    return Err(Error::CoverCycle(i));
                }
                if !self.up[j].is_subset(&self.up[i]) {
                    return Err(Error::InvalidArgument(format!(
                        "relation not transitive through {i} <= {j}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn from_json(doc: &PosetJson) -> Result<Self> {
        let covers: Vec<(usize, usize)> = doc.covers.iter().map(|c| (c[0], c[1])).collect();
        Self::from_covers(doc.name.clone(), doc.elements.clone(), &covers)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let doc: PosetJson = serde_json::from_str(s)?;
        Self::from_json(&doc)
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            name: self.name.clone(),
            elements: self.labels.clone(),
            covers: self.covers().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> Option<usize> {
        self.one
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le(a, b)
    }

    /// Set from labels; panics on unknown labels (test and constructor helper).
    pub fn set_of(&self, labels: &[&str]) -> ElementSet {
        let idx = labels.iter().map(|l| {
            self.index_of(l)
                .unwrap_or_else(|| panic!("unknown element label {l:?}"))
        });
        ElementSet::from_indices(self.len(), idx).expect("indices come from the poset")
    }

    pub fn labels_of(&self, set: &ElementSet) -> Vec<&str> {
        set.iter().map(|i| self.label(i)).collect()
    }

    /// Hasse diagram as (lower, upper) pairs, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            let mut strict = self.up[i].clone();
            strict.set(i, false);
            let mut indirect = FixedBitSet::with_capacity(n);
            for k in strict.ones() {
                let mut above = self.up[k].clone();
                above.set(k, false);
                indirect.union_with(&above);
            }
            strict.difference_with(&indirect);
            out.extend(strict.ones().map(|j| (i, j)));
        }
        out
    }

    fn check_set(&self, a: &ElementSet) -> Result<()> {
        if a.universe() != self.len() {
            return Err(Error::InvalidArgument(format!(
                "element set over {} indices used with a poset of {} elements",
                a.universe(),
                self.len()
            )));
        }
        if a.is_empty() {
            return Err(Error::EmptyConeArgument);
        }
        Ok(())
    }

    /// `{ b : b >= x for every x in a }`.
    pub fn upper_cone(&self, a: &ElementSet) -> Result<ElementSet> {
        self.check_set(a)?;
        let mut bits = FixedBitSet::with_capacity(self.len());
        bits.insert_range(..);
        for x in a.iter() {
            bits.intersect_with(&self.up[x]);
        }
        Ok(ElementSet::from_bits(bits))
    }

    /// `{ b : b <= x for every x in a }`.
    pub fn lower_cone(&self, a: &ElementSet) -> Result<ElementSet> {
        self.check_set(a)?;
        let mut bits = FixedBitSet::with_capacity(self.len());
        bits.insert_range(..);
        for x in a.iter() {
            bits.intersect_with(&self.down[x]);
        }
        Ok(ElementSet::from_bits(bits))
    }

    /// True iff `{a, b}^l = {0}`.
    pub fn meets_at_zero(&self, a: usize, b: usize) -> bool {
        self.down[a]
            .intersection(&self.down[b])
            .all(|x| x == self.zero)
    }

    /// `{ b : {x, b}^l = {0} for all x in a }`.
    pub fn annihilator(&self, a: &ElementSet) -> Result<ElementSet> {
        self.check_set(a)?;
        let mut bits = FixedBitSet::with_capacity(self.len());
        for b in 0..self.len() {
            if a.iter().all(|x| self.meets_at_zero(x, b)) {
                bits.insert(b);
            }
        }
        Ok(ElementSet::from_bits(bits))
    }

    /// Minimal nonzero elements, ascending.
    pub fn atoms(&self) -> ElementSet {
        let z = self.zero;
        let mut bits = FixedBitSet::with_capacity(self.len());
        for a in 0..self.len() {
            if a != z && self.down[a].count_ones(..) == 2 {
                bits.insert(a);
            }
        }
        ElementSet::from_bits(bits)
    }

    /// For every element, the set of atom positions (into `atoms()`) below it.
    pub fn atom_supports(&self) -> Vec<FixedBitSet> {
        let atoms = self.atoms().to_vec();
        (0..self.len())
            .map(|x| {
                let mut s = FixedBitSet::with_capacity(atoms.len());
                for (k, &q) in atoms.iter().enumerate() {
                    if self.le(q, x) {
                        s.insert(k);
                    }
                }
                s
            })
            .collect()
    }

    /// `Z(P)`: elements with a nonzero partner meeting them only at 0.
    pub fn zero_divisors(&self) -> ElementSet {
        // {a, b}^l = {0} for some b != 0 iff some atom is not below a
        // (every nonzero element of a finite poset lies above an atom).
        let atoms = self.atoms().to_vec();
        let mut bits = FixedBitSet::with_capacity(self.len());
        for a in 0..self.len() {
            if atoms.iter().any(|&q| !self.le(q, a)) {
                bits.insert(a);
            }
        }
        ElementSet::from_bits(bits)
    }

    /// Dense elements `P \ Z(P)`.
    pub fn dense_elements(&self) -> ElementSet {
        let mut bits = self.zero_divisors().bits;
        bits.toggle_range(..);
        ElementSet::from_bits(bits)
    }

    /// 0-distributivity. For finite posets this is equivalent to every atom
    /// having a pseudocomplement: a failing triple (a, b, c) can always be
    /// moved down to an atom under `a`, and an atom's annihilator is a
    /// down-set that is directed exactly when it has a top.
    pub fn is_zero_distributive(&self) -> bool {
        self.atoms()
            .iter()
            .all(|q| self.pseudocomplement(q).is_some())
    }

    /// The element `b` with `a^perp = b^l`, if any.
    pub fn pseudocomplement(&self, a: usize) -> Option<usize> {
        let single = ElementSet::from_indices(self.len(), [a]).ok()?;
        let perp = self.annihilator(&single).ok()?;
        let found = perp.iter().find(|&b| self.down[b] == *perp.as_bits());
        found
    }

    /// Section semi-complemented: `a !<= b` implies a nonzero `c <= a` with
    /// `{b, c}^l = {0}`.
    pub fn is_ssc(&self) -> bool {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                if self.le(a, b) {
                    continue;
                }
                let found = self.down[a]
                    .ones()
                    .any(|c| c != self.zero && self.meets_at_zero(b, c));
                if !found {
                    return false;
                }
            }
        }
        true
    }

    /// Least upper bound of two elements, if it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let ub = self.up[a].intersection(&self.up[b]).collect::<Vec<_>>();
        ub.iter()
            .copied()
            .find(|&c| ub.iter().all(|&d| self.le(c, d)))
    }

    /// Greatest lower bound of two elements, if it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lb = self.down[a].intersection(&self.down[b]).collect::<Vec<_>>();
        lb.iter()
            .copied()
            .find(|&c| lb.iter().all(|&d| self.le(d, c)))
    }

    pub fn is_lattice(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (a + 1..n).all(|b| self.join(a, b).is_some() && self.meet(a, b).is_some()))
    }

    /// Boolean test for lattices: bounded, atomistic, complemented and of
    /// size `2^atoms`.
    pub fn is_boolean(&self) -> BooleanCheck {
        if !self.is_lattice() {
            return BooleanCheck::NotALattice;
        }
        let Some(one) = self.one else {
            return BooleanCheck::NotBoolean;
        };
        let atoms = self.atoms().to_vec();
        if atoms.len() >= usize::BITS as usize - 1 || self.len() != 1usize << atoms.len() {
            return BooleanCheck::NotBoolean;
        }
        // atomistic: each element is the join of the atoms below it
        for x in 0..self.len() {
            let mut acc = self.zero;
            for &q in atoms.iter().filter(|&&q| self.le(q, x)) {
                acc = self.join(acc, q).expect("lattice");
            }
            if acc != x {
                return BooleanCheck::NotBoolean;
            }
        }
        let complemented = (0..self.len()).all(|a| {
            (0..self.len())
                .any(|b| self.meet(a, b) == Some(self.zero) && self.join(a, b) == Some(one))
        });
        if complemented {
            BooleanCheck::Boolean
        } else {
            BooleanCheck::NotBoolean
        }
    }

    /// Order dual; needs a greatest element to keep a least one.
    pub fn dual(&self) -> Result<FinitePoset> {
        let one = self.one.ok_or(Error::MissingGreatestElement)?;
        Ok(FinitePoset {
            name: format!("{}^d", self.name),
            labels: self.labels.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
            zero: one,
            one: Some(self.zero),
        })
    }

    /// Componentwise product. Elements are enumerated with the first factor
    /// varying slowest; labels are tuples of factor labels.
    pub fn direct_product(factors: &[&FinitePoset]) -> Result<FinitePoset> {
        if factors.is_empty() {
            return Err(Error::InvalidArgument("direct product of no posets".into()));
        }
        let mut total: usize = 1;
        for f in factors {
            total = total.saturating_mul(f.len());
        }
        check_size(total)?;
        let tuples = mixed_radix(&factors.iter().map(|f| f.len()).collect::<Vec<_>>());
        let labels = tuples
            .iter()
            .map(|t| {
                let parts: Vec<&str> = t.iter().zip(factors).map(|(&i, f)| f.label(i)).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let name = factors
            .iter()
            .map(|f| f.name())
            .collect::<Vec<_>>()
            .join("x");
        Self::from_relation(name, labels, |a, b| {
            tuples[a]
                .iter()
                .zip(&tuples[b])
                .zip(factors)
                .all(|((&x, &y), f)| f.le(x, y))
        })
    }

    /// Poset on the same elements as `self` but with relabeled elements.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<FinitePoset> {
        if labels.len() != self.len() {
            return Err(Error::InvalidArgument("label count mismatch".into()));
        }
        check_labels(&labels)?;
        let mut p = self.clone();
        p.labels = labels;
        Ok(p)
    }
}

/// All tuples `t` with `t[i] < radix[i]`, first coordinate slowest.
pub(crate) fn mixed_radix(radix: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &r in radix {
        let mut next = Vec::with_capacity(out.len() * r);
        for t in &out {
            for x in 0..r {
                let mut t2 = t.clone();
                t2.push(x);
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

/// Chain `0 < 1 < ... < n-1`.
pub fn make_chain(n: usize) -> Result<FinitePoset> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "chain needs at least one element".into(),
        ));
    }
    check_size(n)?;
    let labels = (0..n).map(|i| i.to_string()).collect();
    let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    FinitePoset::from_covers(format!("C{n}"), labels, &covers)
}

fn subset_label(mask: usize, n: usize) -> String {
    if mask == 0 {
        "0".into()
    } else if n > 0 && mask == (1 << n) - 1 {
        "1".into()
    } else {
        let parts: Vec<String> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| format!("q{}", i + 1))
            .collect();
        parts.join("v")
    }
}

/// Boolean lattice `2^n`; element `k` is the subset with bitmask `k`,
/// labelled as a join of atoms (`q1vq3`), with `0` and `1` for the bounds.
pub fn make_boolean(n: usize) -> Result<FinitePoset> {
    if n >= 13 {
        return Err(Error::TooLarge {
            size: 1usize << n.min(40),
            limit: MAX_POSET_ELEMENTS,
        });
    }
    let size = 1usize << n;
    let labels = (0..size).map(|m| subset_label(m, n)).collect();
    FinitePoset::from_relation(format!("2^{n}"), labels, |a, b| a & b == a)
}

/// The four-level slice of `2^n` made of `0`, the atoms `q_i`, the coatoms
/// `q_i*` (above every atom except `q_i`) and `1`. For `n = 4` this is the
/// standard 0-distributive example whose two-atom classes are all empty.
pub fn make_atom_coatom(n: usize) -> Result<FinitePoset> {
    if n < 3 {
        return Err(Error::InvalidArgument(
            "atom/coatom poset needs n >= 3".into(),
        ));
    }
    let mut labels = vec!["0".to_string()];
    labels.extend((1..=n).map(|i| format!("q{i}")));
    labels.extend((1..=n).map(|i| format!("q{i}*")));
    labels.push("1".into());
    let top = 2 * n + 1;
    let mut covers = Vec::new();
    for i in 1..=n {
        covers.push((0, i));
        covers.push((n + i, top));
        for j in 1..=n {
            if j != i {
                covers.push((j, n + i));
            }
        }
    }
    FinitePoset::from_covers(format!("atom-coatom-{n}"), labels, &covers)
}

/// Divisors of `n` ordered by divisibility; labels are the divisors.
pub fn make_divisor_lattice(n: u64) -> Result<FinitePoset> {
    if n == 0 {
        return Err(Error::InvalidArgument("divisor lattice of 0".into()));
    }
    let divisors = divisors_of(n);
    check_size(divisors.len())?;
    let labels = divisors.iter().map(|d| d.to_string()).collect();
    FinitePoset::from_relation(format!("Div({n})"), labels, |a, b| {
        divisors[b].is_multiple_of(divisors[a])
    })
}

pub(crate) fn divisors_of(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// How the elements of an atom class hang above their atom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassShape {
    /// `q < x_2 < x_3 < ...`
    Chain,
    /// `q < x_t` for all `t`, the `x_t` pairwise incomparable.
    Fan,
}

/// Poset with prescribed annihilator classes: for each listed support
/// (a bitmask over `n_atoms` atoms) a class of the given size. Every singleton
/// support must be listed. Elements of a class with support `S` sit above all
/// elements of classes with support strictly inside `S`. Classes with two or
/// more atoms are chains; atom classes follow `atom_shape`. With `with_top`
/// a greatest element is added (it is dense).
pub fn make_class_poset(
    n_atoms: usize,
    classes: &[(u64, usize)],
    atom_shape: ClassShape,
    with_top: bool,
) -> Result<FinitePoset> {
    if n_atoms == 0 || n_atoms > 20 {
        return Err(Error::InvalidArgument(
            "class poset needs 1..=20 atoms".into(),
        ));
    }
    let full = (1u64 << n_atoms) - 1;
    let mut seen = HashSet::new();
    for &(s, size) in classes {
        if s == 0 || s & !full != 0 {
            return Err(Error::InvalidArgument(format!(
                "support mask {s:#b} out of range"
            )));
        }
        if size == 0 {
            return Err(Error::InvalidArgument("class size must be positive".into()));
        }
        if !seen.insert(s) {
            return Err(Error::InvalidArgument(format!(
                "support mask {s:#b} listed twice"
            )));
        }
    }
    for i in 0..n_atoms {
        if !seen.contains(&(1u64 << i)) {
            return Err(Error::InvalidArgument(format!(
                "atom class {} missing",
                i + 1
            )));
        }
    }
    let mut sorted = classes.to_vec();
    sorted.sort_by_key(|&(s, _)| (s.count_ones(), s));

    let digits = |s: u64| -> String {
        let parts: Vec<String> = (0..n_atoms)
            .filter(|i| s >> i & 1 == 1)
            .map(|i| (i + 1).to_string())
            .collect();
        if n_atoms < 10 {
            parts.concat()
        } else {
            parts.join(",")
        }
    };
    let mut labels = vec!["0".to_string()];
    let mut elems: Vec<(u64, usize)> = vec![(0, 0)];
    for &(s, size) in &sorted {
        for t in 0..size {
            labels.push(format!("x{}_{}", digits(s), t + 1));
            elems.push((s, t));
        }
    }
    if with_top {
        labels.push("1".into());
        elems.push((u64::MAX, 0));
    }
    let name = format!("classes-{n_atoms}");
    FinitePoset::from_relation(name, labels, |a, b| {
        let (sa, ta) = elems[a];
        let (sb, tb) = elems[b];
        if a == b || sa == 0 || sb == u64::MAX {
            return true;
        }
        if sb == 0 || sa == u64::MAX {
            return false;
        }
        if sa == sb {
            let atom_class = sa.count_ones() == 1;
            return match (atom_class, atom_shape) {
                (true, ClassShape::Fan) => ta == 0,
                _ => ta <= tb,
            };
        }
        sa & sb == sa
    })
}

/// Three-atom 0-distributive poset with atom classes of sizes `l` and
/// pseudocomplement classes (`[q_i]*`, support = the other two atoms) of
/// sizes `m`, plus a dense top.
pub fn make_three_atom_poset(
    l: [usize; 3],
    m: [usize; 3],
    atom_shape: ClassShape,
) -> Result<FinitePoset> {
    let classes = [
        (0b001, l[0]),
        (0b010, l[1]),
        (0b100, l[2]),
        (0b110, m[0]),
        (0b101, m[1]),
        (0b011, m[2]),
    ];
    Ok(
        make_class_poset(3, &classes, atom_shape, true)?.with_name(format!(
            "three-atom-l{}-{}-{}-m{}-{}-{}",
            l[0], l[1], l[2], m[0], m[1], m[2]
        )),
    )
}

/// Product of chains `C_{a_1} x ... x C_{a_k}`.
pub fn make_chain_product(sizes: &[usize]) -> Result<FinitePoset> {
    let chains = sizes
        .iter()
        .map(|&s| make_chain(s))
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<&FinitePoset> = chains.iter().collect();
    let p = FinitePoset::direct_product(&refs)?;
    let name = sizes
        .iter()
        .map(|s| format!("C{s}"))
        .collect::<Vec<_>>()
        .join("x");
    Ok(p.with_name(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_zero_distributive(p: &FinitePoset) -> bool {
        let n = p.len();
        for a in 0..n {
            for b in 0..n {
                if !p.meets_at_zero(a, b) {
                    continue;
                }
                for c in 0..n {
                    if !p.meets_at_zero(a, c) {
                        continue;
                    }
                    let bc = p
                        .upper_cone(&ElementSet::from_indices(n, [b, c]).unwrap())
                        .unwrap();
                    let mut set = bc.clone();
                    set.insert(a);
                    let lc = p.lower_cone(&set).unwrap();
                    if lc.to_vec() != vec![p.zero()] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn diamond() -> FinitePoset {
        let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        FinitePoset::from_covers(
            "M3",
            labels,
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        )
        .unwrap()
    }

    #[test]
    fn cones_on_boolean_and_chain() {
        let b2 = make_boolean(2).unwrap();
        let up = b2.upper_cone(&b2.set_of(&["q1", "q2"])).unwrap();
        assert_eq!(b2.labels_of(&up), vec!["1"]);
        let lo = b2.lower_cone(&b2.set_of(&["q1", "q2"])).unwrap();
        assert_eq!(b2.labels_of(&lo), vec!["0"]);

        let c3 = make_chain(3).unwrap();
        assert_eq!(
            c3.upper_cone(&c3.set_of(&["0"])).unwrap().to_vec(),
            vec![0, 1, 2]
        );
        assert_eq!(
            c3.lower_cone(&c3.set_of(&["2"])).unwrap().to_vec(),
            vec![0, 1, 2]
        );
    }

    #[test]
    fn empty_cone_argument_is_rejected() {
        let c3 = make_chain(3).unwrap();
        let e = ElementSet::empty(3);
        assert!(matches!(c3.upper_cone(&e), Err(Error::EmptyConeArgument)));
        assert!(matches!(c3.lower_cone(&e), Err(Error::EmptyConeArgument)));
    }

    #[test]
    fn atom_coatom_poset() {
        let p = make_atom_coatom(4).unwrap();
        let up = p.upper_cone(&p.set_of(&["q1", "q2"])).unwrap();
        assert_eq!(p.labels_of(&up), vec!["q3*", "q4*", "1"]);
        let lo = p.lower_cone(&p.set_of(&["q1*", "q2*"])).unwrap();
        assert_eq!(p.labels_of(&lo), vec!["0", "q3", "q4"]);
        let ann = p.annihilator(&p.set_of(&["q1"])).unwrap();
        assert_eq!(p.labels_of(&ann), vec!["0", "q2", "q3", "q4", "q1*"]);
        assert_eq!(p.labels_of(&p.atoms()), vec!["q1", "q2", "q3", "q4"]);
        assert!(p.is_zero_distributive());
        assert_eq!(
            p.pseudocomplement(p.index_of("q1").unwrap()),
            p.index_of("q1*")
        );
    }

    #[test]
    fn annihilators() {
        let b3 = make_boolean(3).unwrap();
        let ann = b3.annihilator(&b3.set_of(&["q1"])).unwrap();
        assert_eq!(b3.labels_of(&ann), vec!["0", "q2", "q3", "q2vq3"]);
        let all = b3.annihilator(&b3.set_of(&["0"])).unwrap();
        assert_eq!(all.len(), 8);
    }

    #[test]
    fn atoms_and_zero_divisors() {
        let b3 = make_boolean(3).unwrap();
        assert_eq!(b3.atoms().len(), 3);
        let z = b3.zero_divisors();
        assert_eq!(z.len(), 7);
        assert!(!z.contains(b3.one().unwrap()));

        let c32 = make_chain_product(&[3, 2]).unwrap();
        assert_eq!(c32.labels_of(&c32.atoms()), vec!["(0,1)", "(1,0)"]);
        assert_eq!(
            c32.labels_of(&c32.zero_divisors()),
            vec!["(0,0)", "(0,1)", "(1,0)", "(2,0)"]
        );

        let c4 = make_chain(4).unwrap();
        assert_eq!(c4.zero_divisors().to_vec(), vec![0]);
    }

    #[test]
    fn zero_divisor_scan_matches_pairwise_definition() {
        for p in [
            make_boolean(3).unwrap(),
            make_chain_product(&[3, 2]).unwrap(),
            make_atom_coatom(4).unwrap(),
            diamond(),
            make_divisor_lattice(60).unwrap(),
        ] {
            let n = p.len();
            let brute: Vec<usize> = (0..n)
                .filter(|&a| (0..n).any(|b| b != p.zero() && p.meets_at_zero(a, b)))
                .collect();
            assert_eq!(p.zero_divisors().to_vec(), brute, "{}", p.name());
        }
    }

    #[test]
    fn zero_distributivity() {
        assert!(make_boolean(3).unwrap().is_zero_distributive());
        assert!(!diamond().is_zero_distributive());
        assert!(make_atom_coatom(4).unwrap().is_zero_distributive());
    }

    #[test]
    fn zero_distributivity_agrees_with_triple_definition() {
        let mut posets = vec![
            make_boolean(3).unwrap(),
            diamond(),
            make_atom_coatom(4).unwrap(),
            make_chain_product(&[2, 3, 2]).unwrap(),
            make_divisor_lattice(36).unwrap(),
            make_three_atom_poset([2, 1, 1], [1, 2, 1], ClassShape::Fan).unwrap(),
            // fan-shaped coatom class: two maximal elements avoid q1
            make_class_poset(
                3,
                &[(1, 1), (2, 1), (4, 1), (6, 2)],
                ClassShape::Chain,
                true,
            )
            .unwrap(),
        ];
        // pentagon N5 and a non-lattice with two tops
        let n5 = FinitePoset::from_covers(
            "N5",
            ["0", "a", "b", "c", "1"].map(String::from).to_vec(),
            &[(0, 1), (1, 2), (0, 3), (2, 4), (3, 4)],
        )
        .unwrap();
        posets.push(n5);
        let bowtie = FinitePoset::from_covers(
            "bowtie",
            ["0", "a", "b", "c", "d"].map(String::from).to_vec(),
            &[(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4)],
        )
        .unwrap();
        posets.push(bowtie);
        for p in &posets {
            assert_eq!(
                p.is_zero_distributive(),
                brute_zero_distributive(p),
                "{}",
                p.name()
            );
        }
    }

    #[test]
    fn pseudocomplements() {
        let b3 = make_boolean(3).unwrap();
        let q1 = b3.index_of("q1").unwrap();
        assert_eq!(b3.pseudocomplement(q1), b3.index_of("q2vq3"));
        let m3 = diamond();
        assert_eq!(m3.pseudocomplement(1), None);
    }

    #[test]
    fn section_semi_complemented() {
        assert!(make_boolean(3).unwrap().is_ssc());
        assert!(!make_chain(3).unwrap().is_ssc());
        assert!(make_chain(2).unwrap().is_ssc());
    }

    #[test]
    fn boolean_check() {
        assert_eq!(make_boolean(4).unwrap().is_boolean(), BooleanCheck::Boolean);
        assert_eq!(
            make_chain(3).unwrap().is_boolean(),
            BooleanCheck::NotBoolean
        );
        assert_eq!(
            make_chain_product(&[3, 3]).unwrap().is_boolean(),
            BooleanCheck::NotBoolean
        );
        let bowtie = FinitePoset::from_covers(
            "bowtie",
            ["0", "a", "b", "c", "d"].map(String::from).to_vec(),
            &[(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4)],
        )
        .unwrap();
        assert_eq!(bowtie.is_boolean(), BooleanCheck::NotALattice);
    }

    #[test]
    fn dual_and_products() {
        let c3 = make_chain(3).unwrap();
        let d = c3.dual().unwrap();
        assert_eq!(d.zero(), 2);
        assert_eq!(d.dual().unwrap().zero(), 0);
        assert!(d.le(2, 0));

        let c2 = make_chain(2).unwrap();
        let sq = FinitePoset::direct_product(&[&c2, &c2]).unwrap();
        assert_eq!(sq.len(), 4);
        assert_eq!(sq.is_boolean(), BooleanCheck::Boolean);
        let cube = FinitePoset::direct_product(&[&c2, &c2, &c2]).unwrap();
        assert_eq!(cube.len(), 8);
        assert_eq!(cube.atoms().len(), 3);
        assert_eq!(make_chain_product(&[3, 2]).unwrap().len(), 6);

        let bowtie_no_top =
            make_class_poset(2, &[(1, 1), (2, 1)], ClassShape::Chain, false).unwrap();
        assert!(matches!(
            bowtie_no_top.dual(),
            Err(Error::MissingGreatestElement)
        ));
    }

    #[test]
    fn constructors() {
        assert_eq!(make_chain(1).unwrap().len(), 1);
        assert_eq!(make_boolean(0).unwrap().len(), 1);
        let b3 = make_boolean(3).unwrap();
        assert_eq!((b3.len(), b3.atoms().len()), (8, 3));
        assert_eq!(make_divisor_lattice(12).unwrap().len(), 6);
        assert!(make_chain(0).is_err());
    }

    #[test]
    fn loader_validation() {
        let labels = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        assert!(matches!(
            FinitePoset::from_covers("d", labels(&["0", "a", "a"]), &[(0, 1), (0, 2)]),
            Err(Error::DuplicateLabel(_))
        ));
        assert!(matches!(
            FinitePoset::from_covers("s", labels(&["0", "a"]), &[(0, 1), (1, 1)]),
            Err(Error::SelfCover(1))
        ));
        assert!(matches!(
            FinitePoset::from_covers("c", labels(&["0", "a", "b"]), &[(0, 1), (1, 2), (2, 1)]),
            Err(Error::CoverCycle(_))
        ));
        assert!(matches!(
            FinitePoset::from_covers("z", labels(&["a", "b"]), &[]),
            Err(Error::MissingLeastElement)
        ));
        assert!(matches!(
            FinitePoset::from_covers("r", labels(&["0", "a"]), &[(0, 5)]),
            Err(Error::IndexOutOfRange { index: 5, .. })
        ));
    }

    #[test]
    fn size_guard() {
        assert!(matches!(make_chain(5000), Err(Error::TooLarge { .. })));
        assert!(make_chain_product(&[64, 65]).is_err());
    }

    #[test]
    fn json_roundtrip_keeps_order() {
        let p = make_atom_coatom(4).unwrap();
        let s = serde_json::to_string(&p.to_json()).unwrap();
        let q = FinitePoset::from_json_str(&s).unwrap();
        assert_eq!(p.labels(), q.labels());
        for a in 0..p.len() {
            for b in 0..p.len() {
                assert_eq!(p.le(a, b), q.le(a, b));
            }
        }
    }
}
