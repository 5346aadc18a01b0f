use std::fmt;

use super::Element;

/// A bijection of `{0..n}` stored as its image vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u16).collect(),
        }
    }

    /// Builds a permutation from zero-based images, returning `None` if
    /// `images` is not a bijection.
    pub fn from_images(images: Vec<u16>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u16>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_some());
        Permutation { images }
    }

    /// Builds a permutation from one-based image labels.
    pub fn from_labels(labels: &[usize]) -> Option<Self> {
        let mut images = Vec::with_capacity(labels.len());
        for &l in labels {
            if l == 0 {
                return None;
            }
            images.push((l - 1) as u16);
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    /// One-based image labels.
    pub fn labels(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        Element::new(self.images[x.index()] as usize)
    }

    #[inline]
    pub(crate) fn apply_ix(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| i == v as usize)
    }

    /// Apply `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    /// Function composition `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        other.then(self)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u16;
        }
        Permutation { images }
    }

    /// `self` applied `m` times; negative `m` uses the inverse.
    pub fn pow(&self, m: i64) -> Permutation {
        let base = if m < 0 { self.inverse() } else { self.clone() };
        let mut acc = Permutation::identity(self.degree());
        for _ in 0..m.unsigned_abs() {
            acc = acc.then(&base);
        }
        acc
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.labels().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_then_are_mirror_images() {
        let a = Permutation::from_labels(&[2, 3, 1]).unwrap();
        let b = Permutation::from_labels(&[1, 3, 2]).unwrap();
        assert_eq!(a.then(&b), b.compose(&a));
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.then(&b).apply(Element::from_label(1)).label(), 3);
    }

    #[test]
    fn inverse_and_pow() {
        let a = Permutation::from_labels(&[2, 3, 4, 1]).unwrap();
        assert!(a.then(&a.inverse()).is_identity());
        assert!(a.pow(4).is_identity());
        assert_eq!(a.pow(-1), a.inverse());
        assert_eq!(a.pow(3), a.inverse());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_labels(&[1, 1]).is_none());
        assert!(Permutation::from_labels(&[1, 3]).is_none());
        assert!(Permutation::from_labels(&[0, 1]).is_none());
    }
}
