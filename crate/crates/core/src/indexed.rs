//! Indexed sequences over the naturals: functions `[m, n] → ℕ`
//! represented by a start index and a nonempty value list, with the
//! constant, shift, pointwise, concatenation, split and editor-comparison
//! operations.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A function `[start, start + len - 1] → ℕ`.  Equality is
/// domain-and-pointwise.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IndexedSeq {
    start: u64,
    values: Vec<u64>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IndexedSeqError {
    EmptyValues,
    NonzeroStart { start: u64 },
    DomainMismatch,
    SplitOutOfRange { k: u64, end: u64 },
    NotConcatenation,
}

impl fmt::Display for IndexedSeqError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexedSeqError::EmptyValues => f.write_str("indexed sequence must be nonempty"),
            IndexedSeqError::NonzeroStart { start } => {
                write!(f, "operation requires domain starting at 0, got start {start}")
            }
            IndexedSeqError::DomainMismatch => f.write_str("domains differ"),
            IndexedSeqError::SplitOutOfRange { k, end } => {
                write!(f, "split index {k} is not in [0, {end})")
            }
            IndexedSeqError::NotConcatenation => {
                f.write_str("the two concatenations disagree")
            }
        }
    }
}

impl IndexedSeq {
    pub fn new(start: u64, values: Vec<u64>) -> Result<IndexedSeq, IndexedSeqError> {
        if values.is_empty() {
            return Err(IndexedSeqError::EmptyValues);
        }
        Ok(IndexedSeq { start, values })
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    /// The upper endpoint `n` of the domain `[start, n]`.
    pub fn end(&self) -> u64 {
        self.start + self.values.len() as u64 - 1
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn get(&self, index: u64) -> Option<u64> {
        if index < self.start {
            return None;
        }
        self.values.get((index - self.start) as usize).copied()
    }

    /// The unique constant sequence `x/[0, n]`.
    pub fn const_seq(x: u64, n: u64) -> IndexedSeq {
        IndexedSeq { start: 0, values: vec![x; n as usize + 1] }
    }

    /// `f⁰ₖ`: the same values re-indexed over `[k, k + n]`.  Requires the
    /// domain to start at 0.
    pub fn shift(&self, k: u64) -> Result<IndexedSeq, IndexedSeqError> {
        self.require_zero_start()?;
        Ok(IndexedSeq { start: k, values: self.values.clone() })
    }

    /// `f ⊕ g`, pointwise sum over a shared domain `[0, n]`.
    pub fn pointwise_add(&self, g: &IndexedSeq) -> Result<IndexedSeq, IndexedSeqError> {
        self.require_same_zero_domain(g)?;
        let values = self.values.iter().zip(&g.values).map(|(a, b)| a + b).collect();
        Ok(IndexedSeq { start: 0, values })
    }

    /// `f ⊖ g`, pointwise truncated difference `a ∸ b = max(a - b, 0)`.
    pub fn pointwise_monus(&self, g: &IndexedSeq) -> Result<IndexedSeq, IndexedSeqError> {
        self.require_same_zero_domain(g)?;
        let values = self.values.iter().zip(&g.values).map(|(a, b)| a.saturating_sub(*b)).collect();
        Ok(IndexedSeq { start: 0, values })
    }

    /// `f ⌢ g = f ∘ g⁰ₙ₊₁`: values of `f` then values of `g`, over
    /// `[0, n + m + 1]`.
    pub fn concat_indexed(&self, g: &IndexedSeq) -> Result<IndexedSeq, IndexedSeqError> {
        self.require_zero_start()?;
        g.require_zero_start()?;
        let mut values = self.values.clone();
        values.extend_from_slice(&g.values);
        Ok(IndexedSeq { start: 0, values })
    }

    /// Splits `f : [0, n]` at `k < n` into the unique `g : [0, k]` and
    /// `h : [0, n ∸ (k+1)]` with `f = g ⌢ h`.
    pub fn split(&self, k: u64) -> Result<(IndexedSeq, IndexedSeq), IndexedSeqError> {
        self.require_zero_start()?;
        if k >= self.end() {
            return Err(IndexedSeqError::SplitOutOfRange { k, end: self.end() });
        }
        let at = k as usize + 1;
        Ok((
            IndexedSeq { start: 0, values: self.values[..at].to_vec() },
            IndexedSeq { start: 0, values: self.values[at..].to_vec() },
        ))
    }

    fn require_zero_start(&self) -> Result<(), IndexedSeqError> {
        if self.start != 0 {
            return Err(IndexedSeqError::NonzeroStart { start: self.start });
        }
        Ok(())
    }

    fn require_same_zero_domain(&self, g: &IndexedSeq) -> Result<(), IndexedSeqError> {
        self.require_zero_start()?;
        g.require_zero_start()?;
        if self.values.len() != g.values.len() {
            return Err(IndexedSeqError::DomainMismatch);
        }
        Ok(())
    }
}

impl fmt::Display for IndexedSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")?;
        if self.start != 0 {
            write!(f, "@{}", self.start)?;
        }
        Ok(())
    }
}

/// Outcome of the editor comparison of `f ⌢ g = p ⌢ q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EditorCase {
    /// `f = p` and `g = q`.
    Equal,
    /// The middle piece `h` with `f = p ⌢ h` and `h ⌢ g = q`.
    MiddleLeft(IndexedSeq),
    /// The middle piece `h` with `p = f ⌢ h` and `h ⌢ q = g`.
    MiddleRight(IndexedSeq),
}

/// The editor trichotomy: given `f ⌢ g = p ⌢ q` (all over `[0, ·]`),
/// exactly one of the three cases holds, with a unique middle piece.
/// Errors when the two concatenations differ.
pub fn editor_compare(
    f: &IndexedSeq,
    g: &IndexedSeq,
    p: &IndexedSeq,
    q: &IndexedSeq,
) -> Result<EditorCase, IndexedSeqError> {
    let left = f.concat_indexed(g)?;
    let right = p.concat_indexed(q)?;
    if left != right {
        return Err(IndexedSeqError::NotConcatenation);
    }
    if f.values.len() == p.values.len() {
        return Ok(EditorCase::Equal);
    }
    if f.values.len() > p.values.len() {
        let h = IndexedSeq { start: 0, values: f.values[p.values.len()..].to_vec() };
        Ok(EditorCase::MiddleLeft(h))
    } else {
        let h = IndexedSeq { start: 0, values: p.values[f.values.len()..].to_vec() };
        Ok(EditorCase::MiddleRight(h))
    }
}

/// All indexed sequences over `[0, len - 1]` with values at most
/// `max_value`, for each length in `1..=max_len`.
pub fn enumerate_indexed(max_len: usize, max_value: u64) -> Vec<IndexedSeq> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u64>> = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        if !prefix.is_empty() {
            out.push(IndexedSeq { start: 0, values: prefix.clone() });
        }
        if prefix.len() < max_len {
            for v in (0..=max_value).rev() {
                let mut next = prefix.clone();
                next.push(v);
                stack.push(next);
            }
        }
    }
    out.sort_by(|a, b| a.values.len().cmp(&b.values.len()).then_with(|| a.values.cmp(&b.values)));
    out
}
