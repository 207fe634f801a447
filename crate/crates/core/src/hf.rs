//! Hereditarily finite sets as ordered snakes: the bijection between
//! finite trees and binary trees, the length-first order on snakes,
//! cardinality, membership, adjunction and extensionality.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::snake::{polish_to_snake, snake_to_polish, BinTree, Snake, SnakeError};

/// A finitely branching tree: `Empty` is `⊥`, `Node` has a nonempty
/// child list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FiniteTree {
    Empty,
    Node(Vec<FiniteTree>),
}

/// Maps a finite tree to the binary tree obtained by left-nesting its
/// children: `F(⟨T_1,...,T_n⟩) = ⟨...⟨⟨⊥, F(T_1)⟩, F(T_2)⟩..., F(T_n)⟩`.
pub fn f_map(t: &FiniteTree) -> BinTree {
    match t {
        FiniteTree::Empty => BinTree::Leaf,
        FiniteTree::Node(children) => {
            let mut acc = BinTree::Leaf;
            for child in children {
                acc = BinTree::pair(acc, f_map(child));
            }
            acc
        }
    }
}

/// The inverse of [`f_map`]; every binary tree decodes.
pub fn f_inv(b: &BinTree) -> FiniteTree {
    match b {
        BinTree::Leaf => FiniteTree::Empty,
        BinTree::Pair(l, r) => {
            let mut children = match f_inv(l) {
                FiniteTree::Empty => Vec::new(),
                FiniteTree::Node(cs) => cs,
            };
            children.push(f_inv(r));
            FiniteTree::Node(children)
        }
    }
}

/// The length-first strict order on snakes: shorter first, equal lengths
/// compared at the least differing index.
pub fn snake_less(x: &Snake, y: &Snake) -> bool {
    snake_cmp(x, y) == Ordering::Less
}

pub fn snake_cmp(x: &Snake, y: &Snake) -> Ordering {
    x.len().cmp(&y.len()).then_with(|| x.values().cmp(y.values()))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HfError {
    Snake(SnakeError),
    /// No index `j` with `f(j) = j`; the input is not a well-formed
    /// encoding.
    NoCardinality,
    /// The member blocks are not strictly increasing (or not themselves
    /// ordered), so the snake is not an ordered snake.
    NotOrdered,
}

impl From<SnakeError> for HfError {
    fn from(e: SnakeError) -> HfError {
        HfError::Snake(e)
    }
}

impl fmt::Display for HfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HfError::Snake(e) => write!(f, "{e}"),
            HfError::NoCardinality => f.write_str("snake has no index j with f(j) = j"),
            HfError::NotOrdered => f.write_str("snake is not an ordered snake"),
        }
    }
}

/// A hereditarily finite set, stored duplicate-free with members sorted
/// by the length-first order on their snake encodings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HFSet {
    members: Vec<HFSet>,
}

impl HFSet {
    /// The empty set.
    pub fn empty() -> HFSet {
        HFSet { members: Vec::new() }
    }

    /// Builds a set from arbitrary members; duplicates are dropped and
    /// the canonical order is established.
    pub fn new(members: Vec<HFSet>) -> HFSet {
        let mut keyed: Vec<(Snake, HFSet)> =
            members.into_iter().map(|m| (hf_to_snake_raw(&m), m)).collect();
        keyed.sort_by(|a, b| snake_cmp(&a.0, &b.0));
        keyed.dedup_by(|a, b| a.0 == b.0);
        HFSet { members: keyed.into_iter().map(|(_, m)| m).collect() }
    }

    pub fn members(&self) -> &[HFSet] {
        &self.members
    }

    pub fn contains(&self, m: &HFSet) -> bool {
        self.members.contains(m)
    }

    /// `self ∪ {m}`.
    pub fn adjoin(&self, m: &HFSet) -> HFSet {
        let mut members = self.members.clone();
        members.push(m.clone());
        HFSet::new(members)
    }

    pub fn rank(&self) -> usize {
        self.members.iter().map(|m| m.rank() + 1).max().unwrap_or(0)
    }
}

/// A snake additionally satisfying the ordered condition: `[0]`, or of
/// the form `bᵏa β_1 ... β_k` with the member blocks ordered snakes in
/// strictly increasing length-first order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderedSnake {
    snake: Snake,
}

impl OrderedSnake {
    pub fn new(snake: Snake) -> Result<OrderedSnake, HfError> {
        let blocks = member_snakes(&snake)?;
        let mut previous: Option<OrderedSnake> = None;
        for block in blocks {
            let ordered = OrderedSnake::new(block)?;
            if let Some(prev) = &previous {
                if snake_cmp(prev.as_snake(), ordered.as_snake()) != Ordering::Less {
                    return Err(HfError::NotOrdered);
                }
            }
            previous = Some(ordered);
        }
        Ok(OrderedSnake { snake })
    }

    pub fn empty_set() -> OrderedSnake {
        OrderedSnake { snake: Snake::leaf() }
    }

    pub fn as_snake(&self) -> &Snake {
        &self.snake
    }

    pub fn into_snake(self) -> Snake {
        self.snake
    }

    /// The member blocks `β_1 ... β_k`, strictly increasing under the
    /// length-first order.
    pub fn members(&self) -> Vec<OrderedSnake> {
        member_snakes(&self.snake)
            .expect("validated on construction")
            .into_iter()
            .map(|snake| OrderedSnake { snake })
            .collect()
    }
}

impl fmt::Display for OrderedSnake {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.snake, f)
    }
}

/// The least index `j` with `f(j) = j`; equals the number of top-level
/// members of the encoded set.
pub fn cardinality(f: &Snake) -> Result<u64, HfError> {
    f.values()
        .iter()
        .enumerate()
        .find(|&(j, &v)| v == j as u64)
        .map(|(j, _)| j as u64)
        .ok_or(HfError::NoCardinality)
}

/// The membership relation on encodings: `g ∈★ f` iff for some level
/// `ℓ < k★` the block of `f` between the least descents to `ℓ+1` and `ℓ`
/// is a copy of `g` shifted by `ℓ`.
pub fn member_star(g: &Snake, f: &Snake) -> bool {
    let Ok(k_star) = cardinality(f) else { return false };
    let values = f.values();
    let n = values.len() as u64 - 1;
    let m = g.len() as u64 - 1;
    for level in 0..k_star {
        // least indices at or after k★ (the prefix b^k a also attains
        // these values, on the way up)
        let m0 = least_index_from(values, k_star, level + 1);
        let m1 = least_index_from(values, k_star, level);
        let (Some(m0), Some(m1)) = (m0, m1) else { continue };
        if m0 >= m1 || m1 > n || m1 != m0 + m + 1 {
            continue;
        }
        let matches = (0..=m)
            .all(|j| values[(m0 + j + 1) as usize] == g.values()[j as usize] + level);
        if matches {
            return true;
        }
    }
    false
}

fn least_index_from(values: &[u64], from: u64, target: u64) -> Option<u64> {
    values
        .iter()
        .enumerate()
        .skip(from as usize)
        .find(|&(_, &v)| v == target)
        .map(|(j, _)| j as u64)
}

/// The `bᵏa β_1 ... β_k` decomposition of a snake, as member snakes.
/// Works on general snakes; orderedness is checked separately.
pub fn member_snakes(f: &Snake) -> Result<Vec<Snake>, HfError> {
    let s = snake_to_polish(f);
    if s == "a" {
        return Ok(Vec::new());
    }
    let bytes = s.as_bytes();
    let k = bytes.iter().take_while(|&&c| c == b'b').count();
    if bytes.get(k) != Some(&b'a') {
        // snakes always decompose this way; guard anyway
        return Err(HfError::Snake(SnakeError::NotPolish));
    }
    let mut blocks = Vec::with_capacity(k);
    let mut at = k + 1;
    for _ in 0..k {
        let end = read_polish_block(bytes, at).ok_or(HfError::Snake(SnakeError::NotPolish))?;
        let block: String = s[at..end].into();
        blocks.push(polish_to_snake(&block)?);
        at = end;
    }
    if at != bytes.len() {
        return Err(HfError::Snake(SnakeError::NotPolish));
    }
    Ok(blocks)
}

fn read_polish_block(bytes: &[u8], at: usize) -> Option<usize> {
    match bytes.get(at)? {
        b'a' => Some(at + 1),
        b'b' => {
            let mid = read_polish_block(bytes, at + 1)?;
            read_polish_block(bytes, mid)
        }
        _ => None,
    }
}

fn hf_to_snake_raw(s: &HFSet) -> Snake {
    let mut blocks: Vec<Snake> = s.members().iter().map(hf_to_snake_raw).collect();
    blocks.sort_by(snake_cmp);
    let k = blocks.len();
    if k == 0 {
        return Snake::leaf();
    }
    let mut polish = String::new();
    for _ in 0..k {
        polish.push('b');
    }
    polish.push('a');
    for block in &blocks {
        polish.push_str(&snake_to_polish(block));
    }
    polish_to_snake(&polish).expect("well-formed by construction")
}

/// Encodes a hereditarily finite set as its unique ordered snake.
pub fn hf_to_snake(s: &HFSet) -> OrderedSnake {
    OrderedSnake::new(hf_to_snake_raw(s)).expect("canonical encodings are ordered")
}

/// Decodes an ordered snake back to the hereditarily finite set it
/// names.
pub fn snake_to_hf(x: &OrderedSnake) -> HFSet {
    let members = x.members().iter().map(snake_to_hf).collect();
    HFSet { members }
}

/// Adjunction on encodings: decode, insert in order, re-encode.  If
/// `g ∈★ f` the result is `f` itself.
pub fn adjoin(f: &OrderedSnake, g: &OrderedSnake) -> OrderedSnake {
    let set = snake_to_hf(f).adjoin(&snake_to_hf(g));
    hf_to_snake(&set)
}

/// All hereditarily finite sets of rank at most `n` (`2^2^...` many:
/// 1, 2, 4, 16, 65536, ... for n = 0, 1, 2, 3, 4).
pub fn sets_of_rank_at_most(n: usize) -> Vec<HFSet> {
    if n == 0 {
        return vec![HFSet::empty()];
    }
    let smaller = sets_of_rank_at_most(n - 1);
    let mut out = Vec::with_capacity(1usize << smaller.len());
    for mask in 0u64..(1u64 << smaller.len()) {
        let members = smaller
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, s)| s.clone())
            .collect();
        out.push(HFSet::new(members));
    }
    out
}
