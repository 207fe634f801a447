//! First-order terms and formulas over the three signatures, the
//! Σ-formula test, relativization to a class, desugaring of the prefix
//! shorthand and the τ-translation of membership formulas.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::seq::Seq;

/// A first-order term.  `Empty` (`e`) / `App` / `Cat` belong to the
/// sequence signature, `Leaf` (`⊥`) / `Pair` to the tree signature.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Term {
    Var(String),
    Empty,
    Leaf,
    App(Box<Term>, Box<Term>),
    Cat(Box<Term>, Box<Term>),
    Pair(Box<Term>, Box<Term>),
}

impl Term {
    pub fn app(a: Term, b: Term) -> Term {
        Term::App(Box::new(a), Box::new(b))
    }

    pub fn cat(a: Term, b: Term) -> Term {
        Term::Cat(Box::new(a), Box::new(b))
    }

    pub fn pair(a: Term, b: Term) -> Term {
        Term::Pair(Box::new(a), Box::new(b))
    }

    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(x) => {
                out.insert(x.clone());
            }
            Term::Empty | Term::Leaf => {}
            Term::App(a, b) | Term::Cat(a, b) | Term::Pair(a, b) => {
                a.vars(out);
                b.vars(out);
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        let mut vs = BTreeSet::new();
        self.vars(&mut vs);
        vs.is_empty()
    }

    fn substitute(&self, var: &str, replacement: &Term) -> Term {
        match self {
            Term::Var(x) if x == var => replacement.clone(),
            Term::Var(_) | Term::Empty | Term::Leaf => self.clone(),
            Term::App(a, b) => {
                Term::app(a.substitute(var, replacement), b.substitute(var, replacement))
            }
            Term::Cat(a, b) => {
                Term::cat(a.substitute(var, replacement), b.substitute(var, replacement))
            }
            Term::Pair(a, b) => {
                Term::pair(a.substitute(var, replacement), b.substitute(var, replacement))
            }
        }
    }
}

/// The canonical variable-free name of a sequence: `()` is named by `e`
/// and `(s_1,...,s_n)` by `(...((e ⊢ s̄_1) ⊢ s̄_2)...) ⊢ s̄_n`.
pub fn sequeral(s: &Seq) -> Term {
    let mut t = Term::Empty;
    for element in s.elements() {
        t = Term::app(t, sequeral(element));
    }
    t
}

/// A first-order formula.  `Prefix` is the `⊑` shorthand of the sequence
/// language kept as a primitive atom, `In` the membership atom of the set
/// language and `Subtree` the `⊑` atom of the tree language.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Formula {
    Eq(Term, Term),
    Prefix(Term, Term),
    In(Term, Term),
    Subtree(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
    /// `∀x ⊑ t [φ]`, with the side condition that `x` does not occur in `t`.
    AllPrefix(String, Term, Box<Formula>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LogicError {
    /// A symbol outside the expected signature was encountered.
    SignatureMismatch { expected: &'static str, found: &'static str },
    /// The class formula of a relativization must have exactly one free
    /// variable.
    BadClass { free_vars: Vec<String> },
    /// The bound term of `∀x ⊑ t` may not contain `x`.
    BoundContainsVar { var: String },
    OpenTerm { var: String },
}

impl fmt::Display for LogicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogicError::SignatureMismatch { expected, found } => {
                write!(f, "signature mismatch: expected {expected}, found {found}")
            }
            LogicError::BadClass { free_vars } => {
                write!(f, "class formula must have exactly one free variable, got {free_vars:?}")
            }
            LogicError::BoundContainsVar { var } => {
                write!(f, "bound term of all-prefix contains the bound variable {var}")
            }
            LogicError::OpenTerm { var } => write!(f, "term is not closed: free variable {var}"),
        }
    }
}

impl Formula {
    // constructor named after the connective, not the trait
    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Formula {
        Formula::Not(Box::new(a))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn forall(x: &str, a: Formula) -> Formula {
        Formula::Forall(x.to_string(), Box::new(a))
    }

    pub fn exists(x: &str, a: Formula) -> Formula {
        Formula::Exists(x.to_string(), Box::new(a))
    }

    pub fn all_prefix(x: &str, bound: Term, a: Formula) -> Formula {
        Formula::AllPrefix(x.to_string(), bound, Box::new(a))
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        match self {
            Formula::Eq(a, b)
            | Formula::Prefix(a, b)
            | Formula::In(a, b)
            | Formula::Subtree(a, b) => {
                let mut vs = BTreeSet::new();
                a.vars(&mut vs);
                b.vars(&mut vs);
                vs
            }
            Formula::Not(a) => a.free_vars(),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                let mut vs = a.free_vars();
                vs.extend(b.free_vars());
                vs
            }
            Formula::Forall(x, a) | Formula::Exists(x, a) => {
                let mut vs = a.free_vars();
                vs.remove(x);
                vs
            }
            Formula::AllPrefix(x, t, a) => {
                let mut vs = a.free_vars();
                vs.remove(x);
                t.vars(&mut vs);
                vs
            }
        }
    }

    /// Every variable occurring anywhere, bound or free.
    pub fn all_vars(&self) -> BTreeSet<String> {
        match self {
            Formula::Eq(a, b)
            | Formula::Prefix(a, b)
            | Formula::In(a, b)
            | Formula::Subtree(a, b) => {
                let mut vs = BTreeSet::new();
                a.vars(&mut vs);
                b.vars(&mut vs);
                vs
            }
            Formula::Not(a) => a.all_vars(),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                let mut vs = a.all_vars();
                vs.extend(b.all_vars());
                vs
            }
            Formula::Forall(x, a) | Formula::Exists(x, a) => {
                let mut vs = a.all_vars();
                vs.insert(x.clone());
                vs
            }
            Formula::AllPrefix(x, t, a) => {
                let mut vs = a.all_vars();
                vs.insert(x.clone());
                t.vars(&mut vs);
                vs
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Substitutes `replacement` for every free occurrence of `var`.
    /// Capture-avoiding: bound variables clashing with a variable of the
    /// replacement are renamed first.
    pub fn substitute(&self, var: &str, replacement: &Term) -> Formula {
        let mut replacement_vars = BTreeSet::new();
        replacement.vars(&mut replacement_vars);
        let mut fresh = FreshVars::avoiding_formula(self);
        for v in &replacement_vars {
            fresh.reserve(v);
        }
        self.substitute_inner(var, replacement, &replacement_vars, &mut fresh)
    }

    fn substitute_inner(
        &self,
        var: &str,
        replacement: &Term,
        replacement_vars: &BTreeSet<String>,
        fresh: &mut FreshVars,
    ) -> Formula {
        let sub = |f: &Formula, fresh: &mut FreshVars| {
            f.substitute_inner(var, replacement, replacement_vars, fresh)
        };
        match self {
            Formula::Eq(a, b) => {
                Formula::Eq(a.substitute(var, replacement), b.substitute(var, replacement))
            }
            Formula::Prefix(a, b) => {
                Formula::Prefix(a.substitute(var, replacement), b.substitute(var, replacement))
            }
            Formula::In(a, b) => {
                Formula::In(a.substitute(var, replacement), b.substitute(var, replacement))
            }
            Formula::Subtree(a, b) => {
                Formula::Subtree(a.substitute(var, replacement), b.substitute(var, replacement))
            }
            Formula::Not(a) => Formula::not(sub(a, fresh)),
            Formula::And(a, b) => Formula::and(sub(a, fresh), sub(b, fresh)),
            Formula::Or(a, b) => Formula::or(sub(a, fresh), sub(b, fresh)),
            Formula::Implies(a, b) => Formula::implies(sub(a, fresh), sub(b, fresh)),
            Formula::Iff(a, b) => Formula::iff(sub(a, fresh), sub(b, fresh)),
            Formula::Forall(x, _) | Formula::Exists(x, _) if x == var => self.clone(),
            Formula::Forall(x, a) => {
                let (x, a) = rename_if_clashing(x, a, replacement_vars, fresh);
                Formula::Forall(x, Box::new(sub(&a, fresh)))
            }
            Formula::Exists(x, a) => {
                let (x, a) = rename_if_clashing(x, a, replacement_vars, fresh);
                Formula::Exists(x, Box::new(sub(&a, fresh)))
            }
            Formula::AllPrefix(x, t, a) => {
                let t = t.substitute(var, replacement);
                if x == var {
                    Formula::AllPrefix(x.clone(), t, a.clone())
                } else {
                    let (x, a) = rename_if_clashing(x, a, replacement_vars, fresh);
                    Formula::AllPrefix(x, t, Box::new(sub(&a, fresh)))
                }
            }
        }
    }
}

fn rename_if_clashing(
    x: &str,
    body: &Formula,
    clash: &BTreeSet<String>,
    fresh: &mut FreshVars,
) -> (String, Formula) {
    if clash.contains(x) {
        let x2 = fresh.next_name();
        (x2.clone(), body.substitute(x, &Term::Var(x2)))
    } else {
        (x.to_string(), body.clone())
    }
}

/// Fresh-variable supply: a monotone counter suffix, skipping names
/// already reserved.
pub struct FreshVars {
    counter: usize,
    taken: BTreeSet<String>,
}

impl FreshVars {
    pub fn new() -> FreshVars {
        FreshVars { counter: 0, taken: BTreeSet::new() }
    }

    pub fn avoiding_formula(f: &Formula) -> FreshVars {
        let mut fv = FreshVars::new();
        for v in f.all_vars() {
            fv.reserve(&v);
        }
        fv
    }

    pub fn reserve(&mut self, name: &str) {
        self.taken.insert(name.to_string());
    }

    pub fn next_name(&mut self) -> String {
        loop {
            let name = format!("v{}", self.counter);
            self.counter += 1;
            if self.taken.insert(name.clone()) {
                return name;
            }
        }
    }
}

impl Default for FreshVars {
    fn default() -> Self {
        FreshVars::new()
    }
}

fn term_in_seq_signature(t: &Term) -> Result<(), LogicError> {
    match t {
        Term::Var(_) | Term::Empty => Ok(()),
        Term::Leaf => Err(LogicError::SignatureMismatch { expected: "{e, app, cat}", found: "bot" }),
        Term::Pair(_, _) => {
            Err(LogicError::SignatureMismatch { expected: "{e, app, cat}", found: "pair" })
        }
        Term::App(a, b) | Term::Cat(a, b) => {
            term_in_seq_signature(a)?;
            term_in_seq_signature(b)
        }
    }
}

/// True iff `phi` is generated by the five Σ-clauses: literals over
/// equational atoms, `⊑`/`⋢` atoms, conjunction, disjunction, unbounded
/// `∃`, and `∀x ⊑ t` with `x` not in `t`.  Errors on symbols outside the
/// sequence signature.
pub fn classify_sigma(phi: &Formula) -> Result<bool, LogicError> {
    match phi {
        Formula::Eq(a, b) | Formula::Prefix(a, b) => {
            term_in_seq_signature(a)?;
            term_in_seq_signature(b)?;
            Ok(true)
        }
        Formula::In(_, _) => {
            Err(LogicError::SignatureMismatch { expected: "{e, app, cat}", found: "in" })
        }
        Formula::Subtree(_, _) => {
            Err(LogicError::SignatureMismatch { expected: "{e, app, cat}", found: "subtree" })
        }
        Formula::Not(a) => match &**a {
            Formula::Eq(s, t) | Formula::Prefix(s, t) => {
                term_in_seq_signature(s)?;
                term_in_seq_signature(t)?;
                Ok(true)
            }
            _ => Ok(false),
        },
        Formula::And(a, b) | Formula::Or(a, b) => Ok(classify_sigma(a)? && classify_sigma(b)?),
        Formula::Implies(_, _) | Formula::Iff(_, _) | Formula::Forall(_, _) => Ok(false),
        Formula::Exists(_, a) => classify_sigma(a),
        Formula::AllPrefix(x, t, a) => {
            term_in_seq_signature(t)?;
            let mut tv = BTreeSet::new();
            t.vars(&mut tv);
            if tv.contains(x) {
                return Err(LogicError::BoundContainsVar { var: x.clone() });
            }
            classify_sigma(a)
        }
    }
}

/// The restriction `φ^K` of `phi` to the class `class`: atoms are left
/// unchanged, connectives are pushed through, `∀x φ` becomes
/// `∀x [K(x) → φ^K]` and `∃x φ` becomes `∃x [K(x) ∧ φ^K]`.  The bounded
/// shorthand `∀x ⊑ t [φ]` is read as the unbounded formula it abbreviates.
/// `class` must have exactly one free variable.
pub fn relativize(phi: &Formula, class: &Formula) -> Result<Formula, LogicError> {
    let free: Vec<String> = class.free_vars().into_iter().collect();
    let [class_var] = &free[..] else {
        return Err(LogicError::BadClass { free_vars: free });
    };
    Ok(relativize_inner(phi, class, class_var))
}

fn class_at(class: &Formula, class_var: &str, x: &str) -> Formula {
    class.substitute(class_var, &Term::var(x))
}

fn relativize_inner(phi: &Formula, class: &Formula, class_var: &str) -> Formula {
    let rec = |f: &Formula| relativize_inner(f, class, class_var);
    match phi {
        Formula::Eq(_, _) | Formula::Prefix(_, _) | Formula::In(_, _) | Formula::Subtree(_, _) => {
            phi.clone()
        }
        Formula::Not(a) => Formula::not(rec(a)),
        Formula::And(a, b) => Formula::and(rec(a), rec(b)),
        Formula::Or(a, b) => Formula::or(rec(a), rec(b)),
        Formula::Implies(a, b) => Formula::implies(rec(a), rec(b)),
        Formula::Iff(a, b) => Formula::iff(rec(a), rec(b)),
        Formula::Forall(x, a) => {
            Formula::forall(x, Formula::implies(class_at(class, class_var, x), rec(a)))
        }
        Formula::Exists(x, a) => {
            Formula::exists(x, Formula::and(class_at(class, class_var, x), rec(a)))
        }
        Formula::AllPrefix(x, t, a) => Formula::forall(
            x,
            Formula::implies(
                class_at(class, class_var, x),
                Formula::implies(Formula::Prefix(Term::var(x), t.clone()), rec(a)),
            ),
        ),
    }
}

/// Expands every `⊑` atom into the `∃y [t_1 ∘ y = t_2]` it abbreviates and
/// every `∀x ⊑ t [φ]` into `∀x [x ⊑ t → φ]`, recursively, so the result
/// contains neither `Prefix` nor `AllPrefix`.
pub fn desugar_prefix(phi: &Formula) -> Formula {
    let mut fresh = FreshVars::avoiding_formula(phi);
    desugar_inner(phi, &mut fresh)
}

fn desugar_inner(phi: &Formula, fresh: &mut FreshVars) -> Formula {
    match phi {
        Formula::Eq(_, _) | Formula::In(_, _) | Formula::Subtree(_, _) => phi.clone(),
        Formula::Prefix(a, b) => {
            let y = fresh.next_name();
            Formula::exists(&y, Formula::Eq(Term::cat(a.clone(), Term::Var(y.clone())), b.clone()))
        }
        Formula::Not(a) => Formula::not(desugar_inner(a, fresh)),
        Formula::And(a, b) => Formula::and(desugar_inner(a, fresh), desugar_inner(b, fresh)),
        Formula::Or(a, b) => Formula::or(desugar_inner(a, fresh), desugar_inner(b, fresh)),
        Formula::Implies(a, b) => {
            Formula::implies(desugar_inner(a, fresh), desugar_inner(b, fresh))
        }
        Formula::Iff(a, b) => Formula::iff(desugar_inner(a, fresh), desugar_inner(b, fresh)),
        Formula::Forall(x, a) => Formula::forall(x, desugar_inner(a, fresh)),
        Formula::Exists(x, a) => Formula::exists(x, desugar_inner(a, fresh)),
        Formula::AllPrefix(x, t, a) => {
            let guard = Formula::Prefix(Term::var(x), t.clone());
            let body = Formula::implies(guard, (**a).clone());
            desugar_inner(&Formula::forall(x, body), fresh)
        }
    }
}

/// The τ-translation of a membership formula into the sequence language:
/// each atom `u ∈ z` becomes `∃v_1 v_2 [(v_1 ⊢ u) ∘ v_2 = z]` with fresh
/// `v_1, v_2`; equality and the logical structure are untouched (a direct
/// interpretation, domain unrelativized).
pub fn translate_ast(phi: &Formula) -> Result<Formula, LogicError> {
    check_ast_language(phi)?;
    let mut fresh = FreshVars::avoiding_formula(phi);
    Ok(translate_inner(phi, &mut fresh))
}

fn check_ast_language(phi: &Formula) -> Result<(), LogicError> {
    let term_ok = |t: &Term| match t {
        Term::Var(_) => Ok(()),
        _ => Err(LogicError::SignatureMismatch { expected: "{in}", found: "function symbol" }),
    };
    match phi {
        Formula::In(a, b) | Formula::Eq(a, b) => {
            term_ok(a)?;
            term_ok(b)
        }
        Formula::Prefix(_, _) => {
            Err(LogicError::SignatureMismatch { expected: "{in}", found: "prefix" })
        }
        Formula::Subtree(_, _) => {
            Err(LogicError::SignatureMismatch { expected: "{in}", found: "subtree" })
        }
        Formula::Not(a) => check_ast_language(a),
        Formula::And(a, b)
        | Formula::Or(a, b)
        | Formula::Implies(a, b)
        | Formula::Iff(a, b) => {
            check_ast_language(a)?;
            check_ast_language(b)
        }
        Formula::Forall(_, a) | Formula::Exists(_, a) => check_ast_language(a),
        Formula::AllPrefix(_, _, _) => {
            Err(LogicError::SignatureMismatch { expected: "{in}", found: "all-prefix" })
        }
    }
}

fn translate_inner(phi: &Formula, fresh: &mut FreshVars) -> Formula {
    match phi {
        Formula::In(u, z) => {
            let v1 = fresh.next_name();
            let v2 = fresh.next_name();
            let lhs = Term::cat(Term::app(Term::Var(v1.clone()), u.clone()), Term::Var(v2.clone()));
            Formula::exists(&v1, Formula::exists(&v2, Formula::Eq(lhs, z.clone())))
        }
        Formula::Eq(_, _) => phi.clone(),
        Formula::Not(a) => Formula::not(translate_inner(a, fresh)),
        Formula::And(a, b) => Formula::and(translate_inner(a, fresh), translate_inner(b, fresh)),
        Formula::Or(a, b) => Formula::or(translate_inner(a, fresh), translate_inner(b, fresh)),
        Formula::Implies(a, b) => {
            Formula::implies(translate_inner(a, fresh), translate_inner(b, fresh))
        }
        Formula::Iff(a, b) => Formula::iff(translate_inner(a, fresh), translate_inner(b, fresh)),
        Formula::Forall(x, a) => Formula::forall(x, translate_inner(a, fresh)),
        Formula::Exists(x, a) => Formula::exists(x, translate_inner(a, fresh)),
        Formula::Prefix(_, _) | Formula::Subtree(_, _) | Formula::AllPrefix(_, _, _) => {
            unreachable!("rejected by check_ast_language")
        }
    }
}
