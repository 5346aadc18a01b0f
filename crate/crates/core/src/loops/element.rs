use std::fmt;

/// An element of a finite loop, stored as a zero-based index.
///
/// The identity is always index 0. Text formats and reports use one-based
/// labels, so `Element::from_label(1)` is the identity.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(u16);

impl Element {
    pub const IDENTITY: Element = Element(0);

    #[inline]
    pub fn new(index: usize) -> Self {
        debug_assert!(index < super::MAX_ORDER);
        Element(index as u16)
    }

    /// Element with the given one-based label.
    #[inline]
    pub fn from_label(label: usize) -> Self {
        assert!(label >= 1, "element labels start at 1");
        Element::new(label - 1)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn label(self) -> usize {
        self.0 as usize + 1
    }

    #[inline]
    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}
