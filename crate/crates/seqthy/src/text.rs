//! Parsers and printers for the textual formats: sequence literals,
//! symbolic-expression terms and formulas, snakes, Polish strings,
//! binary trees, indexed sequences and hereditarily-finite-set
//! literals.  Every printer's output parses back to an equal value.

use std::fmt;

use seqthy_core::hf::HFSet;
use seqthy_core::indexed::IndexedSeq;
use seqthy_core::logic::{Formula, Term};
use seqthy_core::seq::Seq;
use seqthy_core::snake::{is_polish, BinTree, Snake};

/// A parse failure with the byte offset where it was detected.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> ParseError {
        ParseError { position, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

// ---------------------------------------------------------------------
// sequence literals: `()`, `(() (()))`

struct Cursor<'a> {
    input: &'a str,
    at: usize,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str) -> Cursor<'a> {
        Cursor { input, at: 0 }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.at += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.input[self.at..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.at += c.len_utf8();
        Some(c)
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(found) if found == c => {
                self.bump();
                Ok(())
            }
            Some(found) => Err(ParseError::new(self.at, format!("expected {c:?}, found {found:?}"))),
            None => Err(ParseError::new(self.at, format!("expected {c:?}, found end of input"))),
        }
    }

    fn done(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(ParseError::new(self.at, format!("trailing input starting at {c:?}"))),
        }
    }
}

pub fn parse_seq(input: &str) -> Result<Seq, ParseError> {
    let mut cur = Cursor::new(input);
    cur.skip_ws();
    let seq = parse_seq_at(&mut cur)?;
    cur.done()?;
    Ok(seq)
}

fn parse_seq_at(cur: &mut Cursor<'_>) -> Result<Seq, ParseError> {
    cur.expect('(')?;
    let mut elements = Vec::new();
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some(')') => {
                cur.bump();
                return Ok(Seq::from_elements(elements));
            }
            Some('(') => elements.push(parse_seq_at(cur)?),
            Some(c) => {
                return Err(ParseError::new(cur.at, format!("expected '(' or ')', found {c:?}")))
            }
            None => return Err(ParseError::new(cur.at, "unbalanced input: missing ')'")),
        }
    }
}

pub fn print_seq(s: &Seq) -> String {
    s.to_string()
}

// ---------------------------------------------------------------------
// symbolic expressions: terms and formulas

#[derive(Clone, PartialEq, Eq, Debug)]
enum Sexpr {
    Atom(usize, String),
    List(usize, Vec<Sexpr>),
}

impl Sexpr {
    fn position(&self) -> usize {
        match self {
            Sexpr::Atom(at, _) | Sexpr::List(at, _) => *at,
        }
    }
}

fn parse_sexpr(cur: &mut Cursor<'_>) -> Result<Sexpr, ParseError> {
    cur.skip_ws();
    let start = cur.at;
    match cur.peek() {
        Some('(') => {
            cur.bump();
            let mut items = Vec::new();
            loop {
                cur.skip_ws();
                match cur.peek() {
                    Some(')') => {
                        cur.bump();
                        return Ok(Sexpr::List(start, items));
                    }
                    Some(_) => items.push(parse_sexpr(cur)?),
                    None => return Err(ParseError::new(cur.at, "unbalanced input: missing ')'")),
                }
            }
        }
        Some(')') => Err(ParseError::new(start, "unexpected ')'")),
        Some(_) => {
            let mut atom = String::new();
            while let Some(c) = cur.peek() {
                if c.is_ascii_whitespace() || c == '(' || c == ')' {
                    break;
                }
                atom.push(c);
                cur.bump();
            }
            Ok(Sexpr::Atom(start, atom))
        }
        None => Err(ParseError::new(start, "expected an expression, found end of input")),
    }
}

pub fn parse_term(input: &str) -> Result<Term, ParseError> {
    let mut cur = Cursor::new(input);
    let sexpr = parse_sexpr(&mut cur)?;
    cur.done()?;
    term_from_sexpr(&sexpr)
}

fn term_from_sexpr(sexpr: &Sexpr) -> Result<Term, ParseError> {
    match sexpr {
        Sexpr::Atom(_, name) if name == "e" => Ok(Term::Empty),
        Sexpr::Atom(_, name) if name == "bot" => Ok(Term::Leaf),
        Sexpr::Atom(at, name) => {
            check_identifier(*at, name)?;
            Ok(Term::var(name))
        }
        Sexpr::List(at, items) => {
            let Some(Sexpr::Atom(_, head)) = items.first() else {
                return Err(ParseError::new(*at, "expected an operator after '('"));
            };
            let build: fn(Term, Term) -> Term = match head.as_str() {
                "app" => Term::app,
                "cat" => Term::cat,
                "pair" => Term::pair,
                other => {
                    return Err(ParseError::new(
                        items[0].position(),
                        format!("unknown term operator {other:?}"),
                    ))
                }
            };
            let [_, a, b] = &items[..] else {
                return Err(ParseError::new(*at, format!("{head} takes exactly two arguments")));
            };
            Ok(build(term_from_sexpr(a)?, term_from_sexpr(b)?))
        }
    }
}

fn check_identifier(at: usize, name: &str) -> Result<(), ParseError> {
    let ok = !name.is_empty()
        && name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if ok {
        Ok(())
    } else {
        Err(ParseError::new(at, format!("{name:?} is not a valid variable name")))
    }
}

pub fn parse_formula(input: &str) -> Result<Formula, ParseError> {
    let mut cur = Cursor::new(input);
    let sexpr = parse_sexpr(&mut cur)?;
    cur.done()?;
    formula_from_sexpr(&sexpr)
}

fn formula_from_sexpr(sexpr: &Sexpr) -> Result<Formula, ParseError> {
    let Sexpr::List(at, items) = sexpr else {
        return Err(ParseError::new(sexpr.position(), "a formula must be a parenthesized form"));
    };
    let Some(Sexpr::Atom(head_at, head)) = items.first() else {
        return Err(ParseError::new(*at, "expected a connective after '('"));
    };
    let args = &items[1..];
    let two_terms = |build: fn(Term, Term) -> Formula| -> Result<Formula, ParseError> {
        let [a, b] = args else {
            return Err(ParseError::new(*at, format!("{head} takes exactly two terms")));
        };
        Ok(build(term_from_sexpr(a)?, term_from_sexpr(b)?))
    };
    let two_formulas = |build: fn(Formula, Formula) -> Formula| -> Result<Formula, ParseError> {
        let [a, b] = args else {
            return Err(ParseError::new(*at, format!("{head} takes exactly two formulas")));
        };
        Ok(build(formula_from_sexpr(a)?, formula_from_sexpr(b)?))
    };
    let binder = |build: fn(&str, Formula) -> Formula| -> Result<Formula, ParseError> {
        let [x, body] = args else {
            return Err(ParseError::new(*at, format!("{head} takes a variable and a formula")));
        };
        let Sexpr::Atom(x_at, name) = x else {
            return Err(ParseError::new(x.position(), "expected a variable name"));
        };
        check_identifier(*x_at, name)?;
        Ok(build(name, formula_from_sexpr(body)?))
    };
    match head.as_str() {
        "=" => two_terms(Formula::Eq),
        "prefix" => two_terms(Formula::Prefix),
        "in" => two_terms(Formula::In),
        "subtree" => two_terms(Formula::Subtree),
        "not" => {
            let [a] = args else {
                return Err(ParseError::new(*at, "not takes exactly one formula"));
            };
            Ok(Formula::not(formula_from_sexpr(a)?))
        }
        "and" => two_formulas(Formula::and),
        "or" => two_formulas(Formula::or),
        "->" => two_formulas(Formula::implies),
        "<->" => two_formulas(Formula::iff),
        "exists" => binder(Formula::exists),
        "forall" => binder(Formula::forall),
        "all-prefix" => {
            let [x, bound, body] = args else {
                return Err(ParseError::new(
                    *at,
                    "all-prefix takes a variable, a bound term and a formula",
                ));
            };
            let Sexpr::Atom(x_at, name) = x else {
                return Err(ParseError::new(x.position(), "expected a variable name"));
            };
            check_identifier(*x_at, name)?;
            Ok(Formula::all_prefix(name, term_from_sexpr(bound)?, formula_from_sexpr(body)?))
        }
        other => Err(ParseError::new(*head_at, format!("unknown connective {other:?}"))),
    }
}

pub fn print_term(t: &Term) -> String {
    match t {
        Term::Var(x) => x.clone(),
        Term::Empty => "e".to_string(),
        Term::Leaf => "bot".to_string(),
        Term::App(a, b) => format!("(app {} {})", print_term(a), print_term(b)),
        Term::Cat(a, b) => format!("(cat {} {})", print_term(a), print_term(b)),
        Term::Pair(a, b) => format!("(pair {} {})", print_term(a), print_term(b)),
    }
}

pub fn print_formula(phi: &Formula) -> String {
    match phi {
        Formula::Eq(a, b) => format!("(= {} {})", print_term(a), print_term(b)),
        Formula::Prefix(a, b) => format!("(prefix {} {})", print_term(a), print_term(b)),
        Formula::In(a, b) => format!("(in {} {})", print_term(a), print_term(b)),
        Formula::Subtree(a, b) => format!("(subtree {} {})", print_term(a), print_term(b)),
        Formula::Not(a) => format!("(not {})", print_formula(a)),
        Formula::And(a, b) => format!("(and {} {})", print_formula(a), print_formula(b)),
        Formula::Or(a, b) => format!("(or {} {})", print_formula(a), print_formula(b)),
        Formula::Implies(a, b) => format!("(-> {} {})", print_formula(a), print_formula(b)),
        Formula::Iff(a, b) => format!("(<-> {} {})", print_formula(a), print_formula(b)),
        Formula::Forall(x, a) => format!("(forall {x} {})", print_formula(a)),
        Formula::Exists(x, a) => format!("(exists {x} {})", print_formula(a)),
        Formula::AllPrefix(x, t, a) => {
            format!("(all-prefix {x} {} {})", print_term(t), print_formula(a))
        }
    }
}

// ---------------------------------------------------------------------
// snakes, Polish strings, binary trees, indexed sequences

pub fn parse_snake(input: &str) -> Result<Snake, ParseError> {
    let values = parse_bracket_numbers(input)?;
    Snake::new(values).map_err(|e| ParseError::new(0, e.to_string()))
}

fn parse_bracket_numbers(input: &str) -> Result<Vec<u64>, ParseError> {
    let mut cur = Cursor::new(input);
    cur.skip_ws();
    cur.expect('[')?;
    let mut values = Vec::new();
    loop {
        cur.skip_ws();
        if values.is_empty() && cur.peek() == Some(']') {
            cur.bump();
            break;
        }
        values.push(parse_number(&mut cur)?);
        cur.skip_ws();
        match cur.bump() {
            Some(',') => continue,
            Some(']') => break,
            Some(c) => return Err(ParseError::new(cur.at - 1, format!("expected ',' or ']', found {c:?}"))),
            None => return Err(ParseError::new(cur.at, "expected ',' or ']', found end of input")),
        }
    }
    Ok(values)
}

fn parse_number(cur: &mut Cursor<'_>) -> Result<u64, ParseError> {
    let start = cur.at;
    let mut digits = String::new();
    while cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        digits.push(cur.bump().unwrap());
    }
    digits
        .parse()
        .map_err(|_| ParseError::new(start, "expected a natural number"))
}

pub fn parse_polish(input: &str) -> Result<String, ParseError> {
    let s = input.trim();
    match is_polish(s) {
        Ok(true) => Ok(s.to_string()),
        Ok(false) => Err(ParseError::new(0, "string is not in the Polish tree language")),
        Err(e) => Err(ParseError::new(0, e.to_string())),
    }
}

pub fn parse_tree(input: &str) -> Result<BinTree, ParseError> {
    let mut cur = Cursor::new(input);
    let sexpr = parse_sexpr(&mut cur)?;
    cur.done()?;
    tree_from_sexpr(&sexpr)
}

fn tree_from_sexpr(sexpr: &Sexpr) -> Result<BinTree, ParseError> {
    match sexpr {
        Sexpr::Atom(_, name) if name == "bot" => Ok(BinTree::Leaf),
        Sexpr::Atom(at, name) => {
            Err(ParseError::new(*at, format!("expected bot or (pair ..), found {name:?}")))
        }
        Sexpr::List(at, items) => match &items[..] {
            [Sexpr::Atom(_, head), a, b] if head == "pair" => {
                Ok(BinTree::pair(tree_from_sexpr(a)?, tree_from_sexpr(b)?))
            }
            _ => Err(ParseError::new(*at, "expected (pair t1 t2)")),
        },
    }
}

pub fn print_tree(t: &BinTree) -> String {
    match t {
        BinTree::Leaf => "bot".to_string(),
        BinTree::Pair(a, b) => format!("(pair {} {})", print_tree(a), print_tree(b)),
    }
}

pub fn parse_indexed(input: &str) -> Result<IndexedSeq, ParseError> {
    let (bracket, start) = match input.rfind('@') {
        Some(i) => {
            let mut cur = Cursor::new(&input[i + 1..]);
            let start = parse_number(&mut cur)?;
            cur.done().map_err(|e| ParseError::new(i + 1 + e.position, e.message))?;
            (&input[..i], start)
        }
        None => (input, 0),
    };
    let values = parse_bracket_numbers(bracket)?;
    IndexedSeq::new(start, values).map_err(|e| ParseError::new(0, e.to_string()))
}

pub fn print_indexed(f: &IndexedSeq) -> String {
    f.to_string()
}

// ---------------------------------------------------------------------
// hereditarily-finite-set literals: `{}`, `{{},{{}}}`

pub fn parse_hf(input: &str) -> Result<HFSet, ParseError> {
    let mut cur = Cursor::new(input);
    cur.skip_ws();
    let set = parse_hf_at(&mut cur)?;
    cur.done()?;
    Ok(set)
}

fn parse_hf_at(cur: &mut Cursor<'_>) -> Result<HFSet, ParseError> {
    cur.expect('{')?;
    let mut members = Vec::new();
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some('}') if members.is_empty() => {
                cur.bump();
                break;
            }
            Some('{') => {
                members.push(parse_hf_at(cur)?);
                cur.skip_ws();
                match cur.bump() {
                    Some(',') => continue,
                    Some('}') => break,
                    Some(c) => {
                        return Err(ParseError::new(
                            cur.at - 1,
                            format!("expected ',' or '}}', found {c:?}"),
                        ))
                    }
                    None => {
                        return Err(ParseError::new(cur.at, "expected ',' or '}', found end of input"))
                    }
                }
            }
            Some(c) => return Err(ParseError::new(cur.at, format!("expected '{{', found {c:?}"))),
            None => return Err(ParseError::new(cur.at, "unbalanced input: missing '}'")),
        }
    }
    Ok(HFSet::new(members))
}

pub fn print_hf(set: &HFSet) -> String {
    let members: Vec<String> = set.members().iter().map(print_hf).collect();
    format!("{{{}}}", members.join(","))
}
