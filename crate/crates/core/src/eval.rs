//! Truth in the standard model: variable-free term evaluation, a
//! three-valued budgeted decision procedure for Σ-sentences, and the
//! semantic membership relation behind the τ-interpretation.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::logic::{classify_sigma, Formula, Term};
use crate::seq::{enumerate, Seq};
use crate::snake::BinTree;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EvalError {
    /// Term evaluation reached a variable with no binding.
    OpenTerm { var: String },
    /// A symbol of the other signature appeared in the term.
    WrongSignature,
    /// `eval_sigma` was handed a formula outside the Σ-fragment.
    NotSigma,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::OpenTerm { var } => write!(f, "open term: unbound variable {var}"),
            EvalError::WrongSignature => write!(f, "term uses symbols of the other signature"),
            EvalError::NotSigma => write!(f, "formula is not a Sigma-formula"),
        }
    }
}

/// Variable bindings used during evaluation.
pub type Env = BTreeMap<String, Seq>;

/// Evaluates a sequence-signature term under `env` (pass an empty map for
/// closed terms).
pub fn eval_term_env(t: &Term, env: &Env) -> Result<Seq, EvalError> {
    match t {
        Term::Var(x) => env.get(x).cloned().ok_or(EvalError::OpenTerm { var: x.clone() }),
        Term::Empty => Ok(Seq::empty()),
        Term::Leaf | Term::Pair(_, _) => Err(EvalError::WrongSignature),
        Term::App(a, b) => Ok(eval_term_env(a, env)?.append(&eval_term_env(b, env)?)),
        Term::Cat(a, b) => Ok(eval_term_env(a, env)?.concat(&eval_term_env(b, env)?)),
    }
}

/// Evaluates a closed sequence-signature term in the standard model.
pub fn eval_term(t: &Term) -> Result<Seq, EvalError> {
    eval_term_env(t, &Env::new())
}

/// Evaluates a closed tree-signature term in the term model of binary
/// trees.
pub fn eval_tree_term(t: &Term) -> Result<BinTree, EvalError> {
    match t {
        Term::Var(x) => Err(EvalError::OpenTerm { var: x.clone() }),
        Term::Leaf => Ok(BinTree::Leaf),
        Term::Pair(a, b) => Ok(BinTree::pair(eval_tree_term(a)?, eval_tree_term(b)?)),
        Term::Empty | Term::App(_, _) | Term::Cat(_, _) => Err(EvalError::WrongSignature),
    }
}

/// Outcome of the budgeted Σ-decision procedure.  `True` carries one
/// `(variable, witness)` pair per existential on the accepting path.
/// `False` is only ever produced along paths whose truth is decidable
/// without unbounded search; a fruitless witness search yields `Unknown`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    True(Vec<(String, Seq)>),
    False,
    Unknown,
}

impl Verdict {
    pub fn is_true(&self) -> bool {
        matches!(self, Verdict::True(_))
    }
}

/// Decides a closed Σ-sentence up to the witness-size `budget`: bounded
/// universals are enumerated through initial segments, unbounded
/// existentials are searched through all sequences of size at most
/// `budget`, in nondecreasing size order.
pub fn eval_sigma(phi: &Formula, budget: usize) -> Result<Verdict, EvalError> {
    if classify_sigma(phi) != Ok(true) {
        return Err(EvalError::NotSigma);
    }
    let mut env = Env::new();
    eval_sigma_env(phi, budget, &mut env)
}

fn eval_sigma_env(phi: &Formula, budget: usize, env: &mut Env) -> Result<Verdict, EvalError> {
    match phi {
        Formula::Eq(a, b) => {
            let va = eval_term_env(a, env)?;
            let vb = eval_term_env(b, env)?;
            Ok(if va == vb { Verdict::True(Vec::new()) } else { Verdict::False })
        }
        Formula::Prefix(a, b) => {
            let va = eval_term_env(a, env)?;
            let vb = eval_term_env(b, env)?;
            Ok(if va.is_prefix_of(&vb) { Verdict::True(Vec::new()) } else { Verdict::False })
        }
        Formula::Not(inner) => match eval_sigma_env(inner, budget, env)? {
            Verdict::True(_) => Ok(Verdict::False),
            Verdict::False => Ok(Verdict::True(Vec::new())),
            // literals are decidable, so this branch is unreachable for
            // well-formed Sigma input
            Verdict::Unknown => Ok(Verdict::Unknown),
        },
        Formula::And(a, b) => {
            let va = eval_sigma_env(a, budget, env)?;
            let vb = eval_sigma_env(b, budget, env)?;
            Ok(match (va, vb) {
                (Verdict::True(mut wa), Verdict::True(wb)) => {
                    wa.extend(wb);
                    Verdict::True(wa)
                }
                (Verdict::False, _) | (_, Verdict::False) => Verdict::False,
                _ => Verdict::Unknown,
            })
        }
        Formula::Or(a, b) => {
            let va = eval_sigma_env(a, budget, env)?;
            if va.is_true() {
                return Ok(va);
            }
            let vb = eval_sigma_env(b, budget, env)?;
            Ok(match (va, vb) {
                (_, Verdict::True(w)) => Verdict::True(w),
                (Verdict::False, Verdict::False) => Verdict::False,
                _ => Verdict::Unknown,
            })
        }
        Formula::Exists(x, body) => {
            for candidate in enumerate(budget) {
                let shadowed = env.insert(x.clone(), candidate.clone());
                let verdict = eval_sigma_env(body, budget, env)?;
                restore(env, x, shadowed);
                if let Verdict::True(mut w) = verdict {
                    w.insert(0, (x.clone(), candidate));
                    return Ok(Verdict::True(w));
                }
            }
            // the witness may simply be larger than the budget
            Ok(Verdict::Unknown)
        }
        Formula::AllPrefix(x, bound, body) => {
            let bound_value = eval_term_env(bound, env)?;
            let mut witnesses = Vec::new();
            let mut unknown = false;
            for segment in bound_value.initial_segments() {
                let shadowed = env.insert(x.clone(), segment);
                let verdict = eval_sigma_env(body, budget, env)?;
                restore(env, x, shadowed);
                match verdict {
                    Verdict::True(w) => witnesses.extend(w),
                    Verdict::False => return Ok(Verdict::False),
                    Verdict::Unknown => unknown = true,
                }
            }
            Ok(if unknown { Verdict::Unknown } else { Verdict::True(witnesses) })
        }
        _ => Err(EvalError::NotSigma),
    }
}

fn restore(env: &mut Env, x: &str, shadowed: Option<Seq>) {
    match shadowed {
        Some(v) => {
            env.insert(x.into(), v);
        }
        None => {
            env.remove(x);
        }
    }
}

/// The semantic content of the τ-interpretation: true iff there are
/// `v_1, v_2` with `(v_1 ⊢ u) ∘ v_2 = y`, decided by exhaustive
/// decomposition of `y`.
pub fn tau_member(u: &Seq, y: &Seq) -> bool {
    for split in 0..y.len() {
        let v1 = Seq::from_elements(y.elements()[..split].to_vec());
        let v2 = Seq::from_elements(y.elements()[split + 1..].to_vec());
        if v1.append(u).concat(&v2) == *y {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::sequeral;
    use alloc::vec;

    fn e() -> Term {
        Term::Empty
    }

    fn seq(elements: Vec<Seq>) -> Seq {
        Seq::from_elements(elements)
    }

    #[test]
    fn eval_term_examples() {
        assert_eq!(eval_term(&Term::cat(e(), e())).unwrap(), Seq::empty());
        let t = Term::cat(Term::app(e(), e()), Term::app(e(), e()));
        assert_eq!(eval_term(&t).unwrap(), seq(vec![Seq::empty(), Seq::empty()]));
        assert!(matches!(
            eval_term(&Term::var("x")),
            Err(EvalError::OpenTerm { .. })
        ));
    }

    #[test]
    fn sequerals_evaluate_back_to_their_sequence() {
        for s in enumerate(6) {
            assert_eq!(eval_term(&sequeral(&s)).unwrap(), s);
        }
    }

    #[test]
    fn eval_sigma_examples() {
        let t = Formula::Eq(Term::cat(e(), e()), e());
        assert_eq!(eval_sigma(&t, 3).unwrap(), Verdict::True(vec![]));

        // append strictly increases size, so x ⊢ x = x has no witness
        let no_witness = Formula::exists(
            "x",
            Formula::Eq(Term::app(Term::var("x"), Term::var("x")), Term::var("x")),
        );
        for budget in 1..=5 {
            assert_eq!(eval_sigma(&no_witness, budget).unwrap(), Verdict::Unknown);
        }

        // initial segments of (()) are () and (())
        let bound = Term::app(e(), e());
        let phi = Formula::all_prefix(
            "x",
            bound.clone(),
            Formula::or(
                Formula::Eq(Term::var("x"), e()),
                Formula::Eq(Term::var("x"), bound.clone()),
            ),
        );
        assert!(eval_sigma(&phi, 2).unwrap().is_true());
    }

    #[test]
    fn eval_sigma_rejects_non_sigma() {
        let phi = Formula::forall("x", Formula::Eq(Term::var("x"), Term::var("x")));
        assert_eq!(eval_sigma(&phi, 2), Err(EvalError::NotSigma));
    }

    #[test]
    fn witnesses_are_sound() {
        // re-evaluating with reported witnesses substituted yields truth
        let phi = Formula::exists(
            "x",
            Formula::exists(
                "y",
                Formula::Eq(
                    Term::cat(Term::var("x"), Term::var("y")),
                    Term::app(e(), e()),
                ),
            ),
        );
        let Verdict::True(witnesses) = eval_sigma(&phi, 3).unwrap() else { panic!() };
        let mut stripped = phi.clone();
        for (var, value) in &witnesses {
            let Formula::Exists(x, body) = stripped else { panic!() };
            assert_eq!(&x, var);
            stripped = body.substitute(var, &sequeral(value));
        }
        assert!(eval_sigma(&stripped, 0).unwrap().is_true());
    }

    #[test]
    fn eval_sigma_monotone_in_budget() {
        let phi = Formula::exists(
            "x",
            Formula::Eq(Term::var("x"), Term::app(Term::app(e(), e()), e())),
        );
        let mut seen_true = false;
        for budget in 0..=6 {
            let v = eval_sigma(&phi, budget).unwrap();
            if seen_true {
                assert!(v.is_true(), "budget {budget} regressed");
            }
            seen_true = seen_true || v.is_true();
        }
        assert!(seen_true);
    }

    #[test]
    fn tau_member_examples() {
        let empty = Seq::empty();
        let one = seq(vec![empty.clone()]);
        let y = seq(vec![empty.clone(), one.clone()]);
        assert!(tau_member(&empty, &y));
        assert!(tau_member(&one, &y));
        assert!(!tau_member(&seq(vec![empty.clone(), empty.clone()]), &y));
    }

    #[test]
    fn tau_member_is_top_level_membership() {
        for y in enumerate(6) {
            for u in enumerate(6) {
                let direct = y.elements().contains(&u);
                assert_eq!(tau_member(&u, &y), direct, "u={u} y={y}");
            }
        }
    }
}
