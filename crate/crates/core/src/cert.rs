//! Proof certificates for true Σ-sentences, mirroring the induction of
//! the completeness argument: a generator that follows the case
//! analysis and a small kernel that recomputes every side condition.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::eval::{eval_term, EvalError};
use crate::logic::{classify_sigma, sequeral, Formula, Term};
use crate::seq::{enumerate, Seq};

/// One concatenation rewrite `s̄ ∘ t̄ = (s∘t)‾`, cited by its instance
/// data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RewriteStep {
    pub left: Seq,
    pub right: Seq,
    pub result: Seq,
}

/// Normalizes a closed sequence-signature term to the sequence it
/// names, returning one rewrite step per `∘` node (innermost first).
pub fn normalize_term(t: &Term) -> Result<(Seq, Vec<RewriteStep>), EvalError> {
    match t {
        Term::Var(x) => Err(EvalError::OpenTerm { var: x.clone() }),
        Term::Empty => Ok((Seq::empty(), Vec::new())),
        Term::Leaf | Term::Pair(_, _) => Err(EvalError::WrongSignature),
        Term::App(a, b) => {
            let (va, mut trace) = normalize_term(a)?;
            let (vb, tb) = normalize_term(b)?;
            trace.extend(tb);
            Ok((va.append(&vb), trace))
        }
        Term::Cat(a, b) => {
            let (va, mut trace) = normalize_term(a)?;
            let (vb, tb) = normalize_term(b)?;
            trace.extend(tb);
            let result = va.concat(&vb);
            trace.push(RewriteStep { left: va, right: vb, result: result.clone() });
            Ok((result, trace))
        }
    }
}

/// A proof object for a closed Σ-sentence.  Tree-shaped; every node's
/// side condition is recomputable from its own fields together with the
/// sentence being certified.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Certificate {
    /// Both sides of an equation name the same sequence.
    EqNorm { lhs: Term, rhs: Term, canon: Seq },
    /// The sides of a negated equation name distinct sequences.
    NeqSequeral { lhs: Term, rhs: Term, left_value: Seq, right_value: Seq },
    /// `rhs` names `lhs`-value concatenated with `rest`.
    PrefixWitness { lhs: Term, rhs: Term, rest: Seq },
    /// `lhs`-value differs from every initial segment of `rhs`-value;
    /// `segments` must list those segments exactly.
    NotPrefix { lhs: Term, rhs: Term, segments: Vec<Seq> },
    AndNode(Box<Certificate>, Box<Certificate>),
    OrLeft(Box<Certificate>),
    OrRight(Box<Certificate>),
    /// `sub` certifies the body with the witness's canonical name
    /// substituted in.
    ExistsWitness { witness: Seq, sub: Box<Certificate> },
    /// One sub-certificate per initial segment of `bound_value`, in
    /// segment order.
    BoundedAll { bound_value: Seq, subs: Vec<Certificate> },
}

/// Why no certificate was produced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ProveError {
    NotSigma,
    Eval(EvalError),
    /// The sentence is false in the standard model.
    False,
    /// The witness search budget ran out; the sentence may still be
    /// true.
    Unknown,
}

impl From<EvalError> for ProveError {
    fn from(e: EvalError) -> ProveError {
        ProveError::Eval(e)
    }
}

impl core::fmt::Display for ProveError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ProveError::NotSigma => f.write_str("not a Sigma-sentence"),
            ProveError::Eval(e) => write!(f, "{e}"),
            ProveError::False => f.write_str("sentence is false"),
            ProveError::Unknown => f.write_str("witness search budget exhausted"),
        }
    }
}

/// Builds a certificate for a closed true Σ-sentence, searching
/// existential witnesses through all sequences of size at most
/// `budget` in enumeration order.  Deterministic in `phi` and `budget`.
pub fn prove_sigma(phi: &Formula, budget: usize) -> Result<Certificate, ProveError> {
    if classify_sigma(phi) != Ok(true) {
        return Err(ProveError::NotSigma);
    }
    prove_inner(phi, budget)
}

fn prove_inner(phi: &Formula, budget: usize) -> Result<Certificate, ProveError> {
    match phi {
        Formula::Eq(a, b) => {
            let va = eval_term(a)?;
            let vb = eval_term(b)?;
            if va == vb {
                Ok(Certificate::EqNorm { lhs: a.clone(), rhs: b.clone(), canon: va })
            } else {
                Err(ProveError::False)
            }
        }
        Formula::Prefix(a, b) => {
            let va = eval_term(a)?;
            let vb = eval_term(b)?;
            if va.is_prefix_of(&vb) {
                let rest = Seq::from_elements(vb.elements()[va.len()..].to_vec());
                Ok(Certificate::PrefixWitness { lhs: a.clone(), rhs: b.clone(), rest })
            } else {
                Err(ProveError::False)
            }
        }
        Formula::Not(inner) => match &**inner {
            Formula::Eq(a, b) => {
                let va = eval_term(a)?;
                let vb = eval_term(b)?;
                if va != vb {
                    Ok(Certificate::NeqSequeral {
                        lhs: a.clone(),
                        rhs: b.clone(),
                        left_value: va,
                        right_value: vb,
                    })
                } else {
                    Err(ProveError::False)
                }
            }
            Formula::Prefix(a, b) => {
                let va = eval_term(a)?;
                let vb = eval_term(b)?;
                if !va.is_prefix_of(&vb) {
                    Ok(Certificate::NotPrefix {
                        lhs: a.clone(),
                        rhs: b.clone(),
                        segments: vb.initial_segments(),
                    })
                } else {
                    Err(ProveError::False)
                }
            }
            _ => Err(ProveError::NotSigma),
        },
        Formula::And(a, b) => {
            let ca = prove_inner(a, budget);
            let cb = prove_inner(b, budget);
            match (ca, cb) {
                (Ok(ca), Ok(cb)) => Ok(Certificate::AndNode(Box::new(ca), Box::new(cb))),
                (Err(ProveError::False), _) | (_, Err(ProveError::False)) => {
                    Err(ProveError::False)
                }
                (Err(e), _) | (_, Err(e)) => Err(e),
            }
        }
        Formula::Or(a, b) => match prove_inner(a, budget) {
            Ok(ca) => Ok(Certificate::OrLeft(Box::new(ca))),
            Err(ea) => match prove_inner(b, budget) {
                Ok(cb) => Ok(Certificate::OrRight(Box::new(cb))),
                Err(ProveError::False) => Err(ea),
                Err(eb) => Err(eb),
            },
        },
        Formula::Exists(x, body) => {
            for candidate in enumerate(budget) {
                let instance = body.substitute(x, &sequeral(&candidate));
                match prove_inner(&instance, budget) {
                    Ok(sub) => {
                        return Ok(Certificate::ExistsWitness {
                            witness: candidate,
                            sub: Box::new(sub),
                        })
                    }
                    Err(ProveError::False) | Err(ProveError::Unknown) => continue,
                    Err(e) => return Err(e),
                }
            }
            Err(ProveError::Unknown)
        }
        Formula::AllPrefix(x, bound, body) => {
            let bound_value = eval_term(bound)?;
            let mut subs = Vec::new();
            for segment in bound_value.initial_segments() {
                let instance = body.substitute(x, &sequeral(&segment));
                subs.push(prove_inner(&instance, budget)?);
            }
            Ok(Certificate::BoundedAll { bound_value, subs })
        }
        _ => Err(ProveError::NotSigma),
    }
}

/// Validates a certificate against the sentence it claims to prove,
/// recomputing every side condition.  Accepts only sound certificates:
/// acceptance implies truth in the standard model.
pub fn check_cert(cert: &Certificate, phi: &Formula) -> bool {
    check_cert_reason(cert, phi).is_ok()
}

/// As [`check_cert`], but a rejection carries the path to the failing
/// node and the condition that failed.
pub fn check_cert_reason(cert: &Certificate, phi: &Formula) -> Result<(), String> {
    check_at(cert, phi, "root")
}

fn check_at(cert: &Certificate, phi: &Formula, path: &str) -> Result<(), String> {
    let fail = |what: &str| Err(format!("{path}: {what}"));
    match (cert, phi) {
        (Certificate::EqNorm { lhs, rhs, canon }, Formula::Eq(a, b)) => {
            if lhs != a || rhs != b {
                return fail("terms do not match the equation");
            }
            let va = eval_checked(lhs, path)?;
            let vb = eval_checked(rhs, path)?;
            if &va != canon {
                return fail("left side does not normalize to canon");
            }
            if &vb != canon {
                return fail("right side does not normalize to canon");
            }
            Ok(())
        }
        (
            Certificate::NeqSequeral { lhs, rhs, left_value, right_value },
            Formula::Not(inner),
        ) => {
            let Formula::Eq(a, b) = &**inner else {
                return fail("certificate shape does not match the sentence");
            };
            if lhs != a || rhs != b {
                return fail("terms do not match the disequation");
            }
            if &eval_checked(lhs, path)? != left_value {
                return fail("left value does not recompute");
            }
            if &eval_checked(rhs, path)? != right_value {
                return fail("right value does not recompute");
            }
            if left_value == right_value {
                return fail("values are equal");
            }
            Ok(())
        }
        (Certificate::PrefixWitness { lhs, rhs, rest }, Formula::Prefix(a, b)) => {
            if lhs != a || rhs != b {
                return fail("terms do not match the prefix atom");
            }
            let va = eval_checked(lhs, path)?;
            let vb = eval_checked(rhs, path)?;
            if va.concat(rest) != vb {
                return fail("concatenation identity fails");
            }
            Ok(())
        }
        (Certificate::NotPrefix { lhs, rhs, segments }, Formula::Not(inner)) => {
            let Formula::Prefix(a, b) = &**inner else {
                return fail("certificate shape does not match the sentence");
            };
            if lhs != a || rhs != b {
                return fail("terms do not match the prefix atom");
            }
            let va = eval_checked(lhs, path)?;
            let vb = eval_checked(rhs, path)?;
            if segments != &vb.initial_segments() {
                return fail("segment list is not the initial segments of the right value");
            }
            if segments.contains(&va) {
                return fail("left value is an initial segment");
            }
            Ok(())
        }
        (Certificate::AndNode(ca, cb), Formula::And(a, b)) => {
            check_at(ca, a, &format!("{path}.and-left"))?;
            check_at(cb, b, &format!("{path}.and-right"))
        }
        (Certificate::OrLeft(ca), Formula::Or(a, _)) => {
            check_at(ca, a, &format!("{path}.or-left"))
        }
        (Certificate::OrRight(cb), Formula::Or(_, b)) => {
            check_at(cb, b, &format!("{path}.or-right"))
        }
        (Certificate::ExistsWitness { witness, sub }, Formula::Exists(x, body)) => {
            let instance = body.substitute(x, &sequeral(witness));
            check_at(sub, &instance, &format!("{path}.exists[{witness}]"))
        }
        (Certificate::BoundedAll { bound_value, subs }, Formula::AllPrefix(x, bound, body)) => {
            let vb = eval_checked(bound, path)?;
            if &vb != bound_value {
                return fail("bound value does not recompute");
            }
            let segments = bound_value.initial_segments();
            if subs.len() != segments.len() {
                return fail("one sub-certificate per initial segment required");
            }
            for (i, (sub, segment)) in subs.iter().zip(segments.iter()).enumerate() {
                let instance = body.substitute(x, &sequeral(segment));
                check_at(sub, &instance, &format!("{path}.all[{i}]"))?;
            }
            Ok(())
        }
        _ => fail("certificate shape does not match the sentence"),
    }
}

fn eval_checked(t: &Term, path: &str) -> Result<Seq, String> {
    eval_term(t).map_err(|e| format!("{path}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::{eval_sigma, Verdict};
    use alloc::boxed::Box;
    use alloc::vec;

    fn e() -> Term {
        Term::Empty
    }

    fn one() -> Seq {
        Seq::from_elements(vec![Seq::empty()])
    }

    #[test]
    fn normalize_term_examples() {
        assert_eq!(normalize_term(&e()).unwrap(), (Seq::empty(), vec![]));

        let t = Term::cat(Term::app(e(), e()), Term::app(e(), e()));
        let (canon, trace) = normalize_term(&t).unwrap();
        assert_eq!(canon, Seq::from_elements(vec![Seq::empty(), Seq::empty()]));
        assert_eq!(
            trace,
            vec![RewriteStep { left: one(), right: one(), result: canon.clone() }]
        );

        let t = Term::cat(e(), Term::cat(e(), e()));
        let (canon, trace) = normalize_term(&t).unwrap();
        assert_eq!(canon, Seq::empty());
        assert_eq!(trace.len(), 2);
    }

    #[test]
    fn normalize_agrees_with_eval() {
        // the trace is bookkeeping; the canon must be model truth
        for s in enumerate(5) {
            let t = sequeral(&s);
            assert_eq!(normalize_term(&t).unwrap().0, s);
        }
    }

    #[test]
    fn prove_atomic_cases() {
        let phi = Formula::Eq(Term::cat(e(), e()), e());
        let cert = prove_sigma(&phi, 1).unwrap();
        assert!(matches!(&cert, Certificate::EqNorm { canon, .. } if canon.is_empty()));
        assert!(check_cert(&cert, &phi));

        let phi = Formula::Prefix(
            Term::app(e(), e()),
            Term::cat(Term::app(e(), e()), Term::app(e(), e())),
        );
        let cert = prove_sigma(&phi, 1).unwrap();
        assert!(matches!(&cert, Certificate::PrefixWitness { rest, .. } if rest == &one()));
        assert!(check_cert(&cert, &phi));

        let phi = Formula::not(Formula::Prefix(Term::app(e(), e()), e()));
        let cert = prove_sigma(&phi, 1).unwrap();
        let Certificate::NotPrefix { segments, .. } = &cert else { panic!() };
        assert_eq!(segments, &vec![Seq::empty()]);
        assert!(check_cert(&cert, &phi));
    }

    #[test]
    fn prove_reports_false_and_unknown_distinctly() {
        let falsity = Formula::Eq(Term::app(e(), e()), e());
        assert_eq!(prove_sigma(&falsity, 3), Err(ProveError::False));

        let hopeless = Formula::exists(
            "x",
            Formula::Eq(Term::app(Term::var("x"), Term::var("x")), Term::var("x")),
        );
        assert_eq!(prove_sigma(&hopeless, 3), Err(ProveError::Unknown));

        let non_sigma = Formula::forall("x", Formula::Eq(Term::var("x"), Term::var("x")));
        assert_eq!(prove_sigma(&non_sigma, 3), Err(ProveError::NotSigma));
    }

    #[test]
    fn prove_quantifier_cases() {
        // ∃x[x = (())] with nested bounded ∀ over its prefixes
        let target = Term::app(e(), e());
        let phi = Formula::exists(
            "x",
            Formula::and(
                Formula::Eq(Term::var("x"), target.clone()),
                Formula::all_prefix(
                    "y",
                    target.clone(),
                    Formula::Prefix(Term::var("y"), target.clone()),
                ),
            ),
        );
        let cert = prove_sigma(&phi, 2).unwrap();
        assert!(check_cert(&cert, &phi));
        let Certificate::ExistsWitness { witness, sub } = &cert else { panic!() };
        assert_eq!(witness, &one());
        let Certificate::AndNode(_, b) = &**sub else { panic!() };
        let Certificate::BoundedAll { subs, .. } = &**b else { panic!() };
        assert_eq!(subs.len(), 2);
    }

    #[test]
    fn checker_rejects_mismatched_shapes() {
        let phi = Formula::Eq(e(), e());
        let wrong = Certificate::OrLeft(Box::new(Certificate::EqNorm {
            lhs: e(),
            rhs: e(),
            canon: Seq::empty(),
        }));
        let reason = check_cert_reason(&wrong, &phi).unwrap_err();
        assert!(reason.contains("shape"), "{reason}");

        let bad_values = Certificate::EqNorm {
            lhs: e(),
            rhs: Term::app(e(), e()),
            canon: Seq::empty(),
        };
        assert!(!check_cert(&bad_values, &Formula::Eq(e(), Term::app(e(), e()))));
    }

    #[test]
    fn accepted_certificates_are_sound() {
        // anything the kernel accepts must be true in the model
        let phi = Formula::exists(
            "x",
            Formula::or(
                Formula::Eq(Term::var("x"), Term::app(e(), e())),
                Formula::not(Formula::Eq(Term::var("x"), Term::var("x"))),
            ),
        );
        let cert = prove_sigma(&phi, 2).unwrap();
        assert!(check_cert(&cert, &phi));
        assert!(matches!(eval_sigma(&phi, 2).unwrap(), Verdict::True(_)));
    }

    #[test]
    fn single_value_mutations_are_rejected() {
        let target = Term::app(Term::app(e(), e()), e());
        let phi = Formula::exists(
            "x",
            Formula::and(
                Formula::Prefix(Term::var("x"), target.clone()),
                Formula::Eq(Term::var("x"), target.clone()),
            ),
        );
        let cert = prove_sigma(&phi, 3).unwrap();
        assert!(check_cert(&cert, &phi));
        for mutant in mutate_seqs(&cert) {
            assert!(!check_cert(&mutant, &phi), "mutant accepted: {mutant:?}");
        }
    }

    // every certificate obtained by replacing one embedded Seq value
    fn mutate_seqs(cert: &Certificate) -> Vec<Certificate> {
        fn variants(s: &Seq) -> Vec<Seq> {
            vec![
                s.append(&Seq::empty()),
                if s.is_empty() { one() } else { Seq::empty() },
            ]
        }
        let mut out = Vec::new();
        match cert {
            Certificate::EqNorm { lhs, rhs, canon } => {
                for canon in variants(canon) {
                    out.push(Certificate::EqNorm { lhs: lhs.clone(), rhs: rhs.clone(), canon });
                }
            }
            Certificate::NeqSequeral { lhs, rhs, left_value, right_value } => {
                for v in variants(left_value) {
                    out.push(Certificate::NeqSequeral {
                        lhs: lhs.clone(),
                        rhs: rhs.clone(),
                        left_value: v,
                        right_value: right_value.clone(),
                    });
                }
            }
            Certificate::PrefixWitness { lhs, rhs, rest } => {
                for rest in variants(rest) {
                    out.push(Certificate::PrefixWitness {
                        lhs: lhs.clone(),
                        rhs: rhs.clone(),
                        rest,
                    });
                }
            }
            Certificate::NotPrefix { lhs, rhs, segments } => {
                for (i, s) in segments.iter().enumerate() {
                    for v in variants(s) {
                        let mut segments = segments.clone();
                        segments[i] = v;
                        out.push(Certificate::NotPrefix {
                            lhs: lhs.clone(),
                            rhs: rhs.clone(),
                            segments,
                        });
                    }
                }
            }
            Certificate::AndNode(a, b) => {
                for m in mutate_seqs(a) {
                    out.push(Certificate::AndNode(Box::new(m), b.clone()));
                }
                for m in mutate_seqs(b) {
                    out.push(Certificate::AndNode(a.clone(), Box::new(m)));
                }
            }
            Certificate::OrLeft(a) => {
                for m in mutate_seqs(a) {
                    out.push(Certificate::OrLeft(Box::new(m)));
                }
            }
            Certificate::OrRight(a) => {
                for m in mutate_seqs(a) {
                    out.push(Certificate::OrRight(Box::new(m)));
                }
            }
            Certificate::ExistsWitness { witness, sub } => {
                for witness in variants(witness) {
                    out.push(Certificate::ExistsWitness { witness, sub: sub.clone() });
                }
                for m in mutate_seqs(sub) {
                    out.push(Certificate::ExistsWitness {
                        witness: witness.clone(),
                        sub: Box::new(m),
                    });
                }
            }
            Certificate::BoundedAll { bound_value, subs } => {
                for bound_value in variants(bound_value) {
                    out.push(Certificate::BoundedAll { bound_value, subs: subs.clone() });
                }
                for (i, sub) in subs.iter().enumerate() {
                    for m in mutate_seqs(sub) {
                        let mut subs = subs.clone();
                        subs[i] = m;
                        out.push(Certificate::BoundedAll {
                            bound_value: bound_value.clone(),
                            subs,
                        });
                    }
                }
            }
        }
        out
    }

    #[test]
    fn prove_is_deterministic() {
        let phi = Formula::exists(
            "x",
            Formula::Prefix(Term::var("x"), Term::app(e(), Term::app(e(), e()))),
        );
        let a = prove_sigma(&phi, 3).unwrap();
        let b = prove_sigma(&phi, 3).unwrap();
        assert_eq!(a, b);
    }
}
