use std::fmt;

use crate::loops::Element;

/// A sorted, duplicate-free set of elements of one loop.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet {
    members: Vec<Element>,
}

impl ElementSet {
    pub fn new() -> Self {
        ElementSet::default()
    }

    /// `{0, .., n-1}`, the whole loop of order `n`.
    pub fn full(n: usize) -> Self {
        (0..n).map(Element::new).collect()
    }

    pub fn identity() -> Self {
        ElementSet {
            members: vec![Element::IDENTITY],
        }
    }

    pub fn from_labels(labels: &[usize]) -> Self {
        labels.iter().map(|&l| Element::from_label(l)).collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: Element) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.members.iter().copied()
    }

    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn labels(&self) -> Vec<usize> {
        self.members.iter().map(|e| e.label()).collect()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.iter().all(|a| other.contains(a))
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        self.iter().filter(|&a| other.contains(a)).collect()
    }

    /// Membership mask over `0..n`.
    pub(crate) fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for a in self.iter() {
            m[a.index()] = true;
        }
        m
    }
}

impl FromIterator<Element> for ElementSet {
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        let mut members: Vec<Element> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        ElementSet { members }
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}
