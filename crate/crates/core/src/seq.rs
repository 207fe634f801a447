//! Finite nested sequences: the universe of the standard model.
//!
//! A [`Seq`] is an ordered finite list of sequences; the empty list is the
//! empty sequence `()`.  The constant `e` denotes `()`, `append` attaches
//! one new final element and `concat` juxtaposes element lists.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A finite nested sequence.  Structural equality is identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Seq {
    elements: Vec<Seq>,
}

impl Seq {
    /// The empty sequence `()`.
    pub fn empty() -> Seq {
        Seq { elements: Vec::new() }
    }

    pub fn from_elements(elements: Vec<Seq>) -> Seq {
        Seq { elements }
    }

    pub fn elements(&self) -> &[Seq] {
        &self.elements
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Number of top-level elements.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Total count of sequence nodes, the root included.
    pub fn size(&self) -> usize {
        1 + self.elements.iter().map(Seq::size).sum::<usize>()
    }

    /// Attaches `t` as one new final element of `self`.
    pub fn append(&self, t: &Seq) -> Seq {
        let mut elements = self.elements.clone();
        elements.push(t.clone());
        Seq { elements }
    }

    /// Juxtaposes the element lists of `self` and `t`.
    pub fn concat(&self, t: &Seq) -> Seq {
        let mut elements = self.elements.clone();
        elements.extend_from_slice(&t.elements);
        Seq { elements }
    }

    /// Splits a nonempty sequence into its unique `append` decomposition:
    /// all-but-last and the last element.
    pub fn unappend(&self) -> Option<(Seq, Seq)> {
        let (last, init) = self.elements.split_last()?;
        Some((Seq { elements: init.to_vec() }, last.clone()))
    }

    /// True iff the element list of `self` is a prefix of `t`'s.
    pub fn is_prefix_of(&self, t: &Seq) -> bool {
        t.elements.len() >= self.elements.len()
            && t.elements[..self.elements.len()] == self.elements[..]
    }

    /// All prefixes of the element list, shortest first, `()` and `self`
    /// included.
    pub fn initial_segments(&self) -> Vec<Seq> {
        (0..=self.elements.len())
            .map(|n| Seq { elements: self.elements[..n].to_vec() })
            .collect()
    }
}

// Sequences are ordered by size, ties broken element-wise by the same
// order.  This is the enumeration order, fixed for reproducibility.
impl Ord for Seq {
    fn cmp(&self, other: &Seq) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| {
                for (a, b) in self.elements.iter().zip(other.elements.iter()) {
                    match a.cmp(b) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                self.elements.len().cmp(&other.elements.len())
            })
    }
}

impl PartialOrd for Seq {
    fn partial_cmp(&self, other: &Seq) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            fmt::Display::fmt(e, f)?;
        }
        f.write_str(")")
    }
}

/// Every sequence with `size <= size_bound`, exactly once, in
/// nondecreasing size order (ties by the [`Ord`] on `Seq`).
pub fn enumerate(size_bound: usize) -> Vec<Seq> {
    let mut by_size: Vec<Vec<Seq>> = vec![Vec::new()];
    for n in 1..=size_bound {
        let lists = element_lists(n - 1, &by_size);
        let mut seqs: Vec<Seq> = lists.into_iter().map(Seq::from_elements).collect();
        seqs.sort();
        by_size.push(seqs);
    }
    by_size.into_iter().flatten().collect()
}

/// All element lists with sizes summing to exactly `total`, given the
/// already-built table of sequences per exact size.
fn element_lists(total: usize, by_size: &[Vec<Seq>]) -> Vec<Vec<Seq>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first_size in 1..=total {
        for first in &by_size[first_size] {
            for mut rest in element_lists(total - first_size, by_size) {
                rest.insert(0, first.clone());
                out.push(rest);
            }
        }
    }
    out
}
