//! Bounded brute-force checking of the universal axioms of every system
//! under study, each instantiated over an exhaustively enumerated domain
//! and evaluated in the intended model.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::eval::tau_member;
use crate::hf::{adjoin, hf_to_snake, member_star, sets_of_rank_at_most, OrderedSnake};
use crate::seq::{enumerate, Seq};
use crate::snake::{snake_pair, snake_subpart, tree_to_snake, trees_up_to_leaves, Snake};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AxiomSystem {
    Seq,
    SeqStar,
    SeqPlus,
    WSeq,
    TOnSnakes,
    AstViaTau,
    AstExtOnOrderedSnakes,
}

/// The verdict for one axiom: how many instantiations were checked and,
/// if any failed, a printable counterexample.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxiomResult {
    pub id: &'static str,
    pub tuples: u64,
    pub counterexample: Option<String>,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks every axiom of `system` over its bounded domain: sequences of
/// size at most `bound` for the sequence and set systems, snakes of
/// trees with at most `bound` leaves for the tree theory, and
/// hereditarily finite sets of rank at most `bound` for the
/// extensional set theory.
pub fn check_axioms(system: AxiomSystem, bound: usize) -> Vec<AxiomResult> {
    match system {
        AxiomSystem::Seq => seq_axioms(&enumerate(bound), false, false),
        AxiomSystem::SeqStar => seq_star_axioms(&enumerate(bound)),
        AxiomSystem::SeqPlus => {
            // the union of the plain and starred systems plus cancellation
            let domain = enumerate(bound);
            let mut out = seq_axioms(&domain, false, false);
            out.push(star_identity(&domain));
            out.push(seq_star_5(&domain));
            out.push(seq_plus_c(&domain));
            out
        }
        AxiomSystem::WSeq => wseq_axioms(&enumerate(bound)),
        AxiomSystem::TOnSnakes => t_axioms(bound),
        AxiomSystem::AstViaTau => ast_tau_axioms(&enumerate(bound)),
        AxiomSystem::AstExtOnOrderedSnakes => ast_ext_axioms(bound),
    }
}

struct Check {
    id: &'static str,
    tuples: u64,
    counterexample: Option<String>,
}

impl Check {
    fn new(id: &'static str) -> Check {
        Check { id, tuples: 0, counterexample: None }
    }

    fn instance(&mut self, holds: bool, describe: impl FnOnce() -> String) {
        self.tuples += 1;
        if !holds && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn finish(self) -> AxiomResult {
        AxiomResult { id: self.id, tuples: self.tuples, counterexample: self.counterexample }
    }
}

fn seq_axioms(domain: &[Seq], starred_identity: bool, starred_editor: bool) -> Vec<AxiomResult> {
    let mut out = Vec::new();

    let mut c = Check::new("Seq1");
    for x in domain {
        for y in domain {
            c.instance(!x.append(y).is_empty(), || format!("x={x} y={y}"));
        }
    }
    out.push(c.finish());

    let mut c = Check::new("Seq2");
    for x1 in domain {
        for x2 in domain {
            for y1 in domain {
                for y2 in domain {
                    let holds = x1.append(x2) != y1.append(y2) || (x1 == y1 && x2 == y2);
                    c.instance(holds, || format!("x1={x1} x2={x2} y1={y1} y2={y2}"));
                }
            }
        }
    }
    out.push(c.finish());

    if starred_identity {
        out.push(star_identity(domain));
    } else {
        let mut c = Check::new("Seq3");
        for x in domain {
            c.instance(&x.concat(&Seq::empty()) == x, || format!("x={x}"));
        }
        out.push(c.finish());
    }

    let mut c = Check::new("Seq4");
    for x in domain {
        for y in domain {
            for z in domain {
                // x ∘ (y ⊢ z) = (x ∘ y) ⊢ z
                let holds = x.concat(&y.append(z)) == x.concat(y).append(z);
                c.instance(holds, || format!("x={x} y={y} z={z}"));
            }
        }
    }
    out.push(c.finish());

    if starred_editor {
        out.push(seq_star_5(domain));
    } else {
        let mut c = Check::new("Seq5");
        for x in domain {
            let holds = x.is_empty() || x.unappend().is_some();
            c.instance(holds, || format!("x={x}"));
        }
        out.push(c.finish());
    }

    out
}

fn seq_star_axioms(domain: &[Seq]) -> Vec<AxiomResult> {
    seq_axioms(domain, true, true)
}

fn star_identity(domain: &[Seq]) -> AxiomResult {
    let mut c = Check::new("Seq*3");
    for x in domain {
        let holds = &x.concat(&Seq::empty()) == x && &Seq::empty().concat(x) == x;
        c.instance(holds, || format!("x={x}"));
    }
    c.finish()
}

/// The editor biconditional: xy = zw ↔ ∃u[(z = xu ∧ uw = y) ∨ (x = zu ∧ uy = w)].
/// Any witness u is a contiguous block of one side, so its size is within
/// the bound and the search over the domain is complete.
fn seq_star_5(domain: &[Seq]) -> AxiomResult {
    let mut c = Check::new("Seq*5");
    for x in domain {
        for y in domain {
            for z in domain {
                for w in domain {
                    let lhs = x.concat(y) == z.concat(w);
                    let rhs = domain.iter().any(|u| {
                        (&x.concat(u) == z && &u.concat(w) == y)
                            || (&z.concat(u) == x && &u.concat(y) == w)
                    });
                    c.instance(lhs == rhs, || format!("x={x} y={y} z={z} w={w}"));
                }
            }
        }
    }
    c.finish()
}

fn seq_plus_c(domain: &[Seq]) -> AxiomResult {
    let mut c = Check::new("Seq+c");
    for x in domain {
        for y in domain {
            for z in domain {
                let premise = x.concat(y) == x.concat(z) || y.concat(x) == z.concat(x);
                c.instance(!premise || y == z, || format!("x={x} y={y} z={z}"));
            }
        }
    }
    c.finish()
}

fn wseq_axioms(domain: &[Seq]) -> Vec<AxiomResult> {
    use crate::eval::eval_term;
    use crate::logic::{sequeral, Term};
    let mut out = Vec::new();

    // distinct sequences get distinct canonical names
    let mut c = Check::new("WSeq1");
    for s in domain {
        for t in domain {
            if s == t {
                continue;
            }
            let holds = eval_term(&sequeral(s)) != eval_term(&sequeral(t));
            c.instance(holds, || format!("s={s} t={t}"));
        }
    }
    out.push(c.finish());

    let mut c = Check::new("WSeq2");
    for s in domain {
        for t in domain {
            let lhs = eval_term(&Term::cat(sequeral(s), sequeral(t)));
            let rhs = eval_term(&sequeral(&s.concat(t)));
            c.instance(lhs == rhs, || format!("s={s} t={t}"));
        }
    }
    out.push(c.finish());

    // every ⊑-predecessor of a named sequence is one of its initial
    // segments; prefixes never exceed the size of the whole, so the
    // domain covers all candidates
    let mut c = Check::new("WSeq3");
    for s in domain {
        let segments = s.initial_segments();
        for x in domain {
            let holds = !x.is_prefix_of(s) || segments.contains(x);
            c.instance(holds, || format!("s={s} x={x}"));
        }
    }
    out.push(c.finish());

    out
}

fn t_axioms(max_leaves: usize) -> Vec<AxiomResult> {
    let domain: Vec<Snake> =
        trees_up_to_leaves(max_leaves).iter().map(tree_to_snake).collect();
    let bottom = Snake::leaf();
    let mut out = Vec::new();

    let mut c = Check::new("T1");
    for x in &domain {
        for y in &domain {
            c.instance(snake_pair(x, y) != bottom, || format!("x={x} y={y}"));
        }
    }
    out.push(c.finish());

    let mut c = Check::new("T2");
    for x1 in &domain {
        for x2 in &domain {
            for y1 in &domain {
                for y2 in &domain {
                    let holds = snake_pair(x1, x2) != snake_pair(y1, y2)
                        || (x1 == y1 && x2 == y2);
                    c.instance(holds, || format!("x1={x1} x2={x2} y1={y1} y2={y2}"));
                }
            }
        }
    }
    out.push(c.finish());

    let mut c = Check::new("T3");
    for x in &domain {
        let holds = snake_subpart(x, &bottom) == (x == &bottom);
        c.instance(holds, || format!("x={x}"));
    }
    out.push(c.finish());

    let mut c = Check::new("T4");
    for x in &domain {
        for y in &domain {
            for z in &domain {
                let pair = snake_pair(y, z);
                let lhs = snake_subpart(x, &pair);
                let rhs = x == &pair || snake_subpart(x, y) || snake_subpart(x, z);
                c.instance(lhs == rhs, || format!("x={x} y={y} z={z}"));
            }
        }
    }
    out.push(c.finish());

    out
}

fn ast_tau_axioms(domain: &[Seq]) -> Vec<AxiomResult> {
    let mut out = Vec::new();

    // the empty sequence names an empty set under the membership
    // translation
    let mut c = Check::new("AST1^tau");
    for x in domain {
        c.instance(!tau_member(x, &Seq::empty()), || format!("x={x}"));
    }
    out.push(c.finish());

    // adjunction: u ∈ x⊢y ⇔ u ∈ x ∨ u = y, with z = x⊢y as the witness
    let mut c = Check::new("AST2^tau");
    for x in domain {
        for y in domain {
            let z = x.append(y);
            for u in domain {
                let holds = tau_member(u, &z) == (tau_member(u, x) || u == y);
                c.instance(holds, || format!("x={x} y={y} u={u}"));
            }
        }
    }
    out.push(c.finish());

    out
}

fn ast_ext_axioms(max_rank: usize) -> Vec<AxiomResult> {
    let domain: Vec<OrderedSnake> =
        sets_of_rank_at_most(max_rank).iter().map(hf_to_snake).collect();
    let empty = OrderedSnake::empty_set();
    let mut out = Vec::new();

    let mut c = Check::new("AST1");
    for x in &domain {
        c.instance(!member_star(x.as_snake(), empty.as_snake()), || format!("x={x}"));
    }
    out.push(c.finish());

    let mut c = Check::new("AST2");
    for x in &domain {
        for y in &domain {
            let z = adjoin(x, y);
            for u in &domain {
                let holds = member_star(u.as_snake(), z.as_snake())
                    == (member_star(u.as_snake(), x.as_snake()) || u == y);
                c.instance(holds, || format!("x={x} y={y} u={u}"));
            }
        }
    }
    out.push(c.finish());

    // members of rank-bounded sets are again rank-bounded, so the inner
    // quantifier over the domain is exhaustive
    let mut c = Check::new("AST3");
    for x in &domain {
        for y in &domain {
            let same_members = domain.iter().all(|z| {
                member_star(z.as_snake(), x.as_snake())
                    == member_star(z.as_snake(), y.as_snake())
            });
            c.instance(!same_members || x == y, || format!("x={x} y={y}"));
        }
    }
    out.push(c.finish());

    out
}
