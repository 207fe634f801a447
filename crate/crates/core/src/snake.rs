//! The snake codec for full binary trees: Polish strings over `{a, b}`,
//! the counting characterization, the tree/snake bijection, `⊕`, the
//! sub-part relation, and the pairing interpreting the tree theory.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::indexed::IndexedSeq;

/// A full binary tree: `Leaf` is `⊥`, `Pair` the binary term former.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum BinTree {
    Leaf,
    Pair(Box<BinTree>, Box<BinTree>),
}

impl BinTree {
    pub fn pair(left: BinTree, right: BinTree) -> BinTree {
        BinTree::Pair(Box::new(left), Box::new(right))
    }

    pub fn leaves(&self) -> usize {
        match self {
            BinTree::Leaf => 1,
            BinTree::Pair(l, r) => l.leaves() + r.leaves(),
        }
    }
}

/// A snake: either the single value `0`, or a sequence starting at `2`,
/// ending at `0`, positive in the interior, with adjacent values
/// differing by exactly one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Snake {
    values: Vec<u64>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SnakeError {
    NotASnake,
    NotPolish,
    BadCharacter(char),
}

impl fmt::Display for SnakeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SnakeError::NotASnake => f.write_str("value sequence is not a snake"),
            SnakeError::NotPolish => f.write_str("string is not in the Polish tree language"),
            SnakeError::BadCharacter(c) => write!(f, "character {c:?} is not in {{a, b}}"),
        }
    }
}

impl Snake {
    pub fn new(values: Vec<u64>) -> Result<Snake, SnakeError> {
        if is_snake_shape(&values) {
            Ok(Snake { values })
        } else {
            Err(SnakeError::NotASnake)
        }
    }

    /// The snake `[0]` encoding `⊥`.
    pub fn leaf() -> Snake {
        Snake { values: alloc::vec![0] }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // snakes are nonempty by construction
    }
}

impl fmt::Display for Snake {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

fn is_snake_shape(values: &[u64]) -> bool {
    if values == [0] {
        return true;
    }
    let n = values.len();
    if n < 2 || values[0] != 2 || values[n - 1] != 0 {
        return false;
    }
    if values[..n - 1].contains(&0) {
        return false;
    }
    values.windows(2).all(|w| w[0].abs_diff(w[1]) == 1)
}

/// The counting characterization of the Polish tree language: one more
/// `a` than `b` overall, and no strict prefix with an `a`-surplus.
pub fn is_polish(s: &str) -> Result<bool, SnakeError> {
    if let Some(bad) = s.chars().find(|&c| c != 'a' && c != 'b') {
        return Err(SnakeError::BadCharacter(bad));
    }
    let mut a_count: u64 = 0;
    let mut b_count: u64 = 0;
    for (i, c) in s.chars().enumerate() {
        // every strict prefix must satisfy #a <= #b
        if i > 0 && a_count > b_count {
            return Ok(false);
        }
        match c {
            'a' => a_count += 1,
            _ => b_count += 1,
        }
    }
    Ok(a_count == b_count + 1)
}

/// Prefix encoding of a binary tree: `⊥` is `a`, pairing prepends `b`.
pub fn tree_to_polish(t: &BinTree) -> String {
    let mut out = String::new();
    push_polish(t, &mut out);
    out
}

fn push_polish(t: &BinTree, out: &mut String) {
    match t {
        BinTree::Leaf => out.push('a'),
        BinTree::Pair(l, r) => {
            out.push('b');
            push_polish(l, out);
            push_polish(r, out);
        }
    }
}

/// Unique readability: either the string is `a`, or it is `b` followed by
/// exactly two Polish strings.  Rejects anything else.
pub fn polish_to_tree(s: &str) -> Result<BinTree, SnakeError> {
    let bytes = s.as_bytes();
    let (tree, consumed) = read_tree(bytes, 0)?;
    if consumed == bytes.len() {
        Ok(tree)
    } else {
        Err(SnakeError::NotPolish)
    }
}

fn read_tree(bytes: &[u8], at: usize) -> Result<(BinTree, usize), SnakeError> {
    match bytes.get(at) {
        Some(b'a') => Ok((BinTree::Leaf, at + 1)),
        Some(b'b') => {
            let (l, mid) = read_tree(bytes, at + 1)?;
            let (r, end) = read_tree(bytes, mid)?;
            Ok((BinTree::pair(l, r), end))
        }
        Some(&other) => Err(SnakeError::BadCharacter(other as char)),
        None => Err(SnakeError::NotPolish),
    }
}

/// The value walk of a Polish string: start at 2, step down on `a` and up
/// on `b`.  The single string `a` maps to `[0]`.
pub fn polish_to_snake(s: &str) -> Result<Snake, SnakeError> {
    if !is_polish(s)? {
        return Err(SnakeError::NotPolish);
    }
    if s == "a" {
        return Ok(Snake::leaf());
    }
    let mut values = Vec::with_capacity(s.len());
    let mut current: u64 = 2;
    values.push(current);
    for c in s.chars().skip(1) {
        current = if c == 'a' { current - 1 } else { current + 1 };
        values.push(current);
    }
    Ok(Snake { values })
}

pub fn snake_to_polish(x: &Snake) -> String {
    if x.values == [0] {
        return String::from("a");
    }
    let mut out = String::with_capacity(x.values.len());
    out.push('b');
    for w in x.values.windows(2) {
        out.push(if w[1] < w[0] { 'a' } else { 'b' });
    }
    out
}

pub fn tree_to_snake(t: &BinTree) -> Snake {
    polish_to_snake(&tree_to_polish(t)).expect("tree encodings are Polish strings")
}

pub fn snake_to_tree(x: &Snake) -> BinTree {
    polish_to_tree(&snake_to_polish(x)).expect("snakes decode to Polish strings")
}

/// `(x_1..x_n) ⊕ (y_1..y_m) = (2, x_1+1, ..., x_n+1, y_1, ..., y_m)`.
pub fn snake_oplus(x: &Snake, y: &Snake) -> Snake {
    let mut values = Vec::with_capacity(x.len() + y.len() + 1);
    values.push(2);
    values.extend(x.values.iter().map(|v| v + 1));
    values.extend_from_slice(&y.values);
    debug_assert!(is_snake_shape(&values));
    Snake { values }
}

/// The pairing `⟨f, g⟩ = 2/[0,0] ⌢ (f ⊕ 1/[0,n]) ⌢ g` built from the
/// indexed-sequence operations.  Agrees with [`snake_oplus`] elementwise.
pub fn snake_pair(f: &Snake, g: &Snake) -> Snake {
    let fi = IndexedSeq::new(0, f.values.to_vec()).expect("snakes are nonempty");
    let gi = IndexedSeq::new(0, g.values.to_vec()).expect("snakes are nonempty");
    let head = IndexedSeq::const_seq(2, 0);
    let ones = IndexedSeq::const_seq(1, (f.len() - 1) as u64);
    let shifted = fi.pointwise_add(&ones).expect("same domain");
    let combined = head
        .concat_indexed(&shifted)
        .expect("both start at 0")
        .concat_indexed(&gi)
        .expect("both start at 0");
    Snake::new(combined.values().to_vec()).expect("pairing of snakes is a snake")
}

/// The sub-part relation: true iff `x = [0]`, `x = y`, or a copy of `x`
/// shifted by some `ℓ` sits inside `y` right after an ascent, descending
/// back two below its entry point.
pub fn snake_subpart(x: &Snake, y: &Snake) -> bool {
    if x.values == [0] || x == y {
        return true;
    }
    let n = x.len() - 1; // x : [0, n]
    let max = *y.values.iter().max().unwrap_or(&0);
    for k in 0..y.len() {
        if k + n + 1 >= y.len() {
            break;
        }
        if y.values[k + 1] != y.values[k] + 1 {
            continue;
        }
        for shift in 0..=max {
            let embeds = (0..=n).all(|i| y.values[k + i + 1] == x.values[i] + shift);
            if embeds && y.values[k + 1] == y.values[k + n + 1] + 2 {
                return true;
            }
        }
    }
    false
}

/// Standard recursive subterm test on binary trees.
pub fn subtree(t1: &BinTree, t2: &BinTree) -> bool {
    if t1 == t2 {
        return true;
    }
    match t2 {
        BinTree::Leaf => false,
        BinTree::Pair(l, r) => subtree(t1, l) || subtree(t1, r),
    }
}

/// All binary trees with exactly `n` leaves (Catalan many).
pub fn trees_with_leaves(n: usize) -> Vec<BinTree> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return alloc::vec![BinTree::Leaf];
    }
    let mut out = Vec::new();
    for left_leaves in 1..n {
        for l in trees_with_leaves(left_leaves) {
            for r in trees_with_leaves(n - left_leaves) {
                out.push(BinTree::pair(l.clone(), r));
            }
        }
    }
    out
}

/// All binary trees with at most `n` leaves, fewest leaves first.
pub fn trees_up_to_leaves(n: usize) -> Vec<BinTree> {
    (1..=n).flat_map(trees_with_leaves).collect()
}
