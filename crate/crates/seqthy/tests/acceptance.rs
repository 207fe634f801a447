//! The acceptance gate: one test per criterion, each printing a
//! `criterion N: PASS` line (visible with `--nocapture`); a failed
//! assertion fails the corresponding test.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use seqthy_core::axioms::{check_axioms, AxiomSystem};
use seqthy_core::cert::{check_cert, prove_sigma, Certificate};
use seqthy_core::eval::{eval_term, tau_member};
use seqthy_core::hf::{hf_to_snake, sets_of_rank_at_most, snake_to_hf};
use seqthy_core::indexed::{editor_compare, enumerate_indexed, EditorCase, IndexedSeq};
use seqthy_core::logic::{sequeral, Formula, Term};
use seqthy_core::seq::{enumerate, Seq};
use seqthy_core::snake::{
    is_polish, polish_to_snake, polish_to_tree, snake_subpart, snake_to_polish, snake_to_tree,
    subtree, tree_to_polish, tree_to_snake, trees_up_to_leaves, BinTree,
};

fn pass(number: u32, what: &str) {
    println!("criterion {number}: PASS — {what}");
}

#[test]
fn criterion_01_axiom_suites() {
    let results = check_axioms(AxiomSystem::SeqPlus, 4);
    let ids: Vec<&str> = results.iter().map(|r| r.id).collect();
    assert_eq!(
        ids,
        ["Seq1", "Seq2", "Seq3", "Seq4", "Seq5", "Seq*3", "Seq*5", "Seq+c"]
    );
    for r in &results {
        assert!(
            r.passed(),
            "{} has counterexample {}",
            r.id,
            r.counterexample.as_deref().unwrap_or("")
        );
    }
    pass(1, "Seq1-Seq5, Seq*3, Seq*5, Seq+c hold on all sequences of size <= 4");
}

#[test]
fn criterion_02_counting_characterization() {
    let mut checked = 0u64;
    for len in 0..=16usize {
        for bits in 0u32..(1u32 << len) {
            let s: String = (0..len)
                .map(|i| if bits >> i & 1 == 1 { 'b' } else { 'a' })
                .collect();
            // recursive-descent grammar membership is the oracle
            let grammar = polish_to_tree(&s).is_ok();
            assert_eq!(is_polish(&s), Ok(grammar), "disagreement on {s:?}");
            checked += 1;
        }
    }
    assert_eq!(checked, (1 << 17) - 1);
    pass(2, "counting characterization == grammar membership on all strings of length <= 16");
}

#[test]
fn criterion_03_bijections() {
    let trees = trees_up_to_leaves(10);
    assert_eq!(trees.len(), 1 + 1 + 2 + 5 + 14 + 42 + 132 + 429 + 1430 + 4862);
    for t in &trees {
        assert_eq!(&snake_to_tree(&tree_to_snake(t)), t);
        assert_eq!(&polish_to_tree(&tree_to_polish(t)).unwrap(), t);
    }
    for (polish, snake) in [
        ("a", "[0]"),
        ("babaa", "[2,1,2,1,0]"),
        ("bbabaaa", "[2,3,2,3,2,1,0]"),
    ] {
        assert_eq!(polish_to_snake(polish).unwrap().to_string(), snake);
        assert_eq!(snake_to_polish(&polish_to_snake(polish).unwrap()), polish);
    }
    pass(3, "tree/snake/Polish round trips on all trees with <= 10 leaves, worked examples bit-exact");
}

#[test]
fn criterion_04_pairing_is_oplus() {
    use seqthy_core::snake::snake_oplus;
    let trees = trees_up_to_leaves(6);
    for t1 in &trees {
        for t2 in &trees {
            let paired = tree_to_snake(&BinTree::pair(t1.clone(), t2.clone()));
            let oplus = snake_oplus(&tree_to_snake(t1), &tree_to_snake(t2));
            assert_eq!(paired, oplus, "t1={t1:?} t2={t2:?}");
        }
    }
    pass(4, "snake of a pair equals oplus of the snakes, all pairs with <= 6 leaves each");
}

#[test]
fn criterion_05_subpart_matches_subtree() {
    let trees = trees_up_to_leaves(6);
    for t1 in &trees {
        for t2 in &trees {
            assert_eq!(
                subtree(t1, t2),
                snake_subpart(&tree_to_snake(t1), &tree_to_snake(t2)),
                "t1={t1:?} t2={t2:?}"
            );
        }
    }
    pass(5, "sub-part on snakes == subtree on trees, all pairs with <= 6 leaves each");
}

#[test]
fn criterion_06_t_axioms() {
    let results = check_axioms(AxiomSystem::TOnSnakes, 5);
    assert_eq!(results.iter().map(|r| r.id).collect::<Vec<_>>(), ["T1", "T2", "T3", "T4"]);
    for r in &results {
        assert!(r.passed(), "{}: {}", r.id, r.counterexample.as_deref().unwrap_or(""));
    }
    pass(6, "T1-T4 hold on snakes of all trees with <= 5 leaves");
}

#[test]
fn criterion_07_tau_semantics() {
    for y in enumerate(6) {
        for u in enumerate(6) {
            assert_eq!(tau_member(&u, &y), y.elements().contains(&u), "u={u} y={y}");
        }
    }
    let domain = enumerate(4);
    for x in &domain {
        for y in &domain {
            let z = x.append(y);
            for u in &domain {
                assert_eq!(
                    tau_member(u, &z),
                    tau_member(u, x) || u == y,
                    "x={x} y={y} u={u}"
                );
            }
        }
    }
    pass(7, "membership translation is top-level membership (size <= 6); adjunction equivalence on all triples of size <= 4");
}

// ---------------------------------------------------------------------
// criterion 8: plant witnesses, prove, check, mutate

struct Planter {
    rng: ChaCha8Rng,
    pool: Vec<Seq>,
}

impl Planter {
    fn new(seed: u64) -> Planter {
        Planter { rng: ChaCha8Rng::seed_from_u64(seed), pool: enumerate(3) }
    }

    fn random_seq(&mut self) -> Seq {
        self.pool.choose(&mut self.rng).unwrap().clone()
    }

    /// A closed term denoting `v`, randomly decomposed.
    fn term_for(&mut self, v: &Seq, depth: u32) -> Term {
        if depth == 0 || v.is_empty() {
            return sequeral(v);
        }
        match self.rng.gen_range(0..3) {
            0 => sequeral(v),
            1 => {
                let split = self.rng.gen_range(0..=v.len());
                let a = Seq::from_elements(v.elements()[..split].to_vec());
                let b = Seq::from_elements(v.elements()[split..].to_vec());
                Term::cat(self.term_for(&a, depth - 1), self.term_for(&b, depth - 1))
            }
            _ => {
                let (init, last) = v.unappend().unwrap();
                Term::app(self.term_for(&init, depth - 1), self.term_for(&last, depth - 1))
            }
        }
    }

    /// A closed literal that is true in the standard model.
    fn true_literal(&mut self) -> Formula {
        loop {
            match self.rng.gen_range(0..4) {
                0 => {
                    let v = self.random_seq();
                    return Formula::Eq(self.term_for(&v, 2), self.term_for(&v, 2));
                }
                1 => {
                    let a = self.random_seq();
                    let b = self.random_seq();
                    if a != b {
                        return Formula::not(Formula::Eq(
                            self.term_for(&a, 2),
                            self.term_for(&b, 2),
                        ));
                    }
                }
                2 => {
                    let whole = self.random_seq();
                    let cut = self.rng.gen_range(0..=whole.len());
                    let prefix = Seq::from_elements(whole.elements()[..cut].to_vec());
                    return Formula::Prefix(self.term_for(&prefix, 2), self.term_for(&whole, 2));
                }
                _ => {
                    let a = self.random_seq();
                    let b = self.random_seq();
                    if !a.is_prefix_of(&b) {
                        return Formula::not(Formula::Prefix(
                            self.term_for(&a, 2),
                            self.term_for(&b, 2),
                        ));
                    }
                }
            }
        }
    }

    /// A closed literal that is false in the standard model (still a
    /// legal Sigma-formula, used as the losing side of disjunctions).
    fn false_literal(&mut self) -> Formula {
        let v = self.random_seq();
        let longer = v.append(&Seq::empty());
        if self.rng.gen_bool(0.5) {
            Formula::Eq(self.term_for(&v, 2), self.term_for(&longer, 2))
        } else {
            Formula::Prefix(self.term_for(&longer, 2), self.term_for(&v, 2))
        }
    }

    /// A closed true Sigma-sentence provable within budget 3; every
    /// existential body pins its variable to the planted witness.
    fn true_sentence(&mut self, depth: u32, var_counter: &mut u32) -> Formula {
        if depth == 0 {
            return self.true_literal();
        }
        match self.rng.gen_range(0..5) {
            0 => Formula::and(
                self.true_sentence(depth - 1, var_counter),
                self.true_sentence(depth - 1, var_counter),
            ),
            1 => {
                let good = self.true_sentence(depth - 1, var_counter);
                let bad = self.false_literal();
                if self.rng.gen_bool(0.5) {
                    Formula::or(good, bad)
                } else {
                    Formula::or(bad, good)
                }
            }
            2 => {
                let name = format!("w{}", *var_counter);
                *var_counter += 1;
                let witness = self.random_seq();
                let body = Formula::and(
                    Formula::Eq(Term::var(&name), self.term_for(&witness, 1)),
                    self.true_sentence(depth - 1, var_counter),
                );
                Formula::exists(&name, body)
            }
            3 => {
                let name = format!("w{}", *var_counter);
                *var_counter += 1;
                let bound = self.random_seq();
                let body = Formula::Prefix(Term::var(&name), self.term_for(&bound, 1));
                Formula::all_prefix(&name, self.term_for(&bound, 1), body)
            }
            _ => self.true_literal(),
        }
    }
}

/// All certificates obtained by changing exactly one embedded sequence.
fn mutate_seqs(cert: &Certificate) -> Vec<Certificate> {
    fn variants(s: &Seq) -> Vec<Seq> {
        let one = Seq::from_elements(vec![Seq::empty()]);
        vec![s.append(&Seq::empty()), if s.is_empty() { one } else { Seq::empty() }]
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
            for v in variants(right_value) {
                out.push(Certificate::NeqSequeral {
                    lhs: lhs.clone(),
                    rhs: rhs.clone(),
                    left_value: left_value.clone(),
                    right_value: v,
                });
            }
        }
        Certificate::PrefixWitness { lhs, rhs, rest } => {
            for rest in variants(rest) {
                out.push(Certificate::PrefixWitness { lhs: lhs.clone(), rhs: rhs.clone(), rest });
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
                    out.push(Certificate::BoundedAll { bound_value: bound_value.clone(), subs });
                }
            }
        }
    }
    out
}

#[test]
fn criterion_08_completeness_loop() {
    let mut planter = Planter::new(0x5e9);
    let mut mutants_checked = 0u64;
    for i in 0..500 {
        let mut var_counter = 0;
        let depth = (i % 4) as u32;
        let phi = planter.true_sentence(depth, &mut var_counter);
        let cert = prove_sigma(&phi, 3)
            .unwrap_or_else(|e| panic!("sentence {i} not certified: {e} ({phi:?})"));
        assert!(check_cert(&cert, &phi), "sentence {i}: certificate rejected");
        for mutant in mutate_seqs(&cert) {
            assert!(!check_cert(&mutant, &phi), "sentence {i}: mutant accepted {mutant:?}");
            mutants_checked += 1;
        }
    }
    assert!(mutants_checked >= 1000);
    pass(8, "500 planted sentences: 100% certificates accepted, 100% single-value mutants rejected");
}

#[test]
fn criterion_09_editor_trichotomy() {
    let pieces = enumerate_indexed(3, 2);
    let middles = enumerate_indexed(6, 2);
    let mut checked = 0u64;
    for f in &pieces {
        for g in &pieces {
            let total = f.concat_indexed(g).unwrap();
            for p in &pieces {
                for q in &pieces {
                    let len = [f, g, p, q].iter().map(|s| s.values().len()).sum::<usize>();
                    if len > 6 || p.concat_indexed(q).unwrap() != total {
                        continue;
                    }
                    checked += 1;
                    let equal = (f == p) as usize;
                    let lefts: Vec<&IndexedSeq> = middles
                        .iter()
                        .filter(|&h| {
                            p.concat_indexed(h).unwrap() == *f
                                && &h.concat_indexed(g).unwrap() == q
                        })
                        .collect();
                    let rights: Vec<&IndexedSeq> = middles
                        .iter()
                        .filter(|&h| {
                            f.concat_indexed(h).unwrap() == *p
                                && &h.concat_indexed(q).unwrap() == g
                        })
                        .collect();
                    assert_eq!(
                        equal + lefts.len() + rights.len(),
                        1,
                        "f={f} g={g} p={p} q={q}"
                    );
                    match editor_compare(f, g, p, q).unwrap() {
                        EditorCase::Equal => assert_eq!(equal, 1),
                        EditorCase::MiddleLeft(h) => assert_eq!(lefts, [&h]),
                        EditorCase::MiddleRight(h) => assert_eq!(rights, [&h]),
                    }
                }
            }
        }
    }
    assert!(checked > 0);
    pass(9, "editor trichotomy exact and unique on all matching quadruples, total length <= 6, values <= 2");
}

#[test]
fn criterion_10_hf_bijection_and_extensionality() {
    let v3 = sets_of_rank_at_most(3);
    assert_eq!(v3.len(), 16);
    let mut encodings = Vec::new();
    for set in &v3 {
        let snake = hf_to_snake(set);
        assert_eq!(&snake_to_hf(&snake), set);
        assert!(!encodings.contains(&snake), "collision at {snake}");
        encodings.push(snake);
    }

    let v4 = sets_of_rank_at_most(4);
    assert_eq!(v4.len(), 65536);
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    for _ in 0..200 {
        let set = v4.choose(&mut rng).unwrap();
        assert_eq!(&snake_to_hf(&hf_to_snake(set)), set);
    }

    let results = check_axioms(AxiomSystem::AstExtOnOrderedSnakes, 3);
    assert_eq!(results.iter().map(|r| r.id).collect::<Vec<_>>(), ["AST1", "AST2", "AST3"]);
    for r in &results {
        assert!(r.passed(), "{}: {}", r.id, r.counterexample.as_deref().unwrap_or(""));
    }
    pass(10, "HF bijection over all of V3 and 200 seeded V4 samples; AST1-AST3 hold with adjoin");
}

#[test]
fn criterion_11_sequeral_soundness() {
    for s in enumerate(6) {
        assert_eq!(eval_term(&sequeral(&s)).unwrap(), s, "s={s}");
    }
    pass(11, "evaluating the canonical name of s returns s, for all s of size <= 6");
}
