//! Quotient poset `[P]`: nonzero elements grouped by annihilator, each class
//! named by the set of atoms below its members.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::FinitePoset;

/// One annihilator class. `support` holds 0-based atom positions, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientClass {
    pub label: String,
    pub support: Vec<usize>,
    pub members: Vec<usize>,
    pub dense: bool,
}

impl QuotientClass {
    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Label `P_<support>` with 1-based atom numbers; comma separated once there
/// are ten or more atoms.
pub fn support_label(support: &[usize], atom_count: usize) -> String {
    if support.is_empty() {
        return "P_0".into();
    }
    let parts: Vec<String> = support.iter().map(|i| (i + 1).to_string()).collect();
    if atom_count < 10 {
        format!("P_{}", parts.concat())
    } else {
        format!("P_{}", parts.join(","))
    }
}

#[derive(Clone, Debug)]
pub struct QuotientPoset {
    base: FinitePoset,
    atoms: Vec<usize>,
    classes: Vec<QuotientClass>,
    class_of: Vec<usize>,
    supports: Vec<FixedBitSet>,
}

impl QuotientPoset {
    pub fn base(&self) -> &FinitePoset {
        &self.base
    }

    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    /// Classes in order: `P_0` first, then lexicographic by support.
    pub fn classes(&self) -> &[QuotientClass] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &QuotientClass {
        &self.classes[c]
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// Class with the given support (0-based atom positions, any order).
    pub fn class_with_support(&self, support: &[usize]) -> Option<usize> {
        let mut s = support.to_vec();
        s.sort_unstable();
        s.dedup();
        self.classes.iter().position(|c| c.support == s)
    }

    pub fn class_by_label(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    /// Support of a base element as a bitset over atom positions.
    pub fn element_support(&self, element: usize) -> &FixedBitSet {
        &self.supports[element]
    }

    /// Class of the atom at position `i`.
    pub fn atom_class(&self, i: usize) -> usize {
        self.class_of[self.atoms[i]]
    }

    pub fn class_order_le(&self, c1: usize, c2: usize) -> bool {
        let (a, b) = (&self.classes[c1].support, &self.classes[c2].support);
        a.iter().all(|x| b.binary_search(x).is_ok())
    }

    pub fn classes_adjacent(&self, c1: usize, c2: usize) -> bool {
        let (a, b) = (&self.classes[c1].support, &self.classes[c2].support);
        !a.is_empty() && !b.is_empty() && a.iter().all(|x| b.binary_search(x).is_err())
    }

    /// Pseudocomplement of the atom class `P_i`: the class supported on every
    /// other atom.
    pub fn class_pseudocomplement(&self, atom_class: usize) -> Result<usize> {
        let c = &self.classes[atom_class];
        if c.support.len() != 1 {
            return Err(Error::InvalidArgument(format!(
                "{} is not an atom class",
                c.label
            )));
        }
        if !self.base.is_zero_distributive() {
            return Err(Error::Precondition(
                "base poset is not 0-distributive".into(),
            ));
        }
        let i = c.support[0];
        let rest: Vec<usize> = (0..self.atom_count()).filter(|&j| j != i).collect();
        self.class_with_support(&rest)
            .ok_or_else(|| Error::EmptyClass(support_label(&rest, self.atom_count())))
    }

    /// True iff every subset of the atoms labels a nonempty class. The class
    /// order is subset order by construction, so this is the Boolean test.
    pub fn is_boolean(&self) -> bool {
        let n = self.atom_count();
        n < usize::BITS as usize - 1 && self.classes.len() == 1usize << n
    }

    /// `[P]` as a poset in its own right, elements labelled by class.
    pub fn as_poset(&self) -> Result<FinitePoset> {
        let labels = self.classes.iter().map(|c| c.label.clone()).collect();
        FinitePoset::from_relation(format!("[{}]", self.base.name()), labels, |a, b| {
            self.class_order_le(a, b)
        })
    }

    /// Indices of the classes that become graph vertices: nonzero and not dense.
    pub fn zero_divisor_classes(&self) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&c| !self.classes[c].is_zero() && !self.classes[c].dense)
            .collect()
    }
}

/// Builds `[P]`. Classes are grouped by atom support, which coincides with
/// annihilator equality: `b` annihilates `a` exactly when no atom lies below
/// both.
pub fn quotient(p: &FinitePoset) -> QuotientPoset {
    let atoms = p.atoms().to_vec();
    let supports = p.atom_supports();
    let n_atoms = atoms.len();
    let mut keyed: Vec<(Vec<usize>, usize)> = (0..p.len())
        .map(|x| (supports[x].ones().collect(), x))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));

    let mut classes: Vec<QuotientClass> = Vec::new();
    let mut class_of = vec![0; p.len()];
    for (support, x) in keyed {
        match classes.last_mut() {
            Some(c) if c.support == support => c.members.push(x),
            _ => classes.push(QuotientClass {
                label: support_label(&support, n_atoms),
                dense: n_atoms > 0 && support.len() == n_atoms,
                support,
                members: vec![x],
            }),
        }
        class_of[x] = classes.len() - 1;
    }
    // P_0 is {0}: every nonzero element sits above some atom.
    debug_assert_eq!(classes[0].members, vec![p.zero()]);
    QuotientPoset {
        base: p.clone(),
        atoms,
        classes,
        class_of,
        supports,
    }
}
