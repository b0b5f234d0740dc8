//! Permutations of strand positions.

use std::fmt;

/// A permutation of `{1..n}`: `image(p)` is the bottom position reached by
/// the strand that starts at top position `p`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    // 0-based images
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Builds a permutation from 1-based images. Returns `None` if the
    /// input is not a bijection on `{1..n}`.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return None;
            }
            seen[img - 1] = true;
            out.push(img - 1);
        }
        Some(Permutation { images: out })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 1-based image of a 1-based point.
    pub fn image(&self, p: usize) -> usize {
        self.images[p - 1] + 1
    }

    /// 1-based images in order.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `self` followed by `other`: the strand at `p` goes to `other(self(p))`.
    pub fn then(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len(), "permutation size mismatch");
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    /// Post-composes with the adjacent transposition of positions `i, i+1`
    /// (1-based `i`).
    pub fn swap_after(&mut self, i: usize) {
        for img in self.images.iter_mut() {
            if *img == i - 1 {
                *img = i;
            } else if *img == i {
                *img = i - 1;
            }
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, img) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", img + 1)?;
        }
        write!(f, "]")
    }
}
