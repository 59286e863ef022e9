//! Terms over two binary operations and exhaustive identity checking.

use std::fmt;

use crate::error::{Error, Result};
use crate::scan;
use crate::table::{CayleyTable, CheckResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Dot,
    Star,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    App(Op, Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(i: usize) -> Term {
        Term::Var(i)
    }

    pub fn dot(l: Term, r: Term) -> Term {
        Term::App(Op::Dot, Box::new(l), Box::new(r))
    }

    pub fn star(l: Term, r: Term) -> Term {
        Term::App(Op::Star, Box::new(l), Box::new(r))
    }

    /// Left-associated product `t1 op t2 op … op tk`.
    pub fn chain(op: Op, terms: Vec<Term>) -> Term {
        let mut it = terms.into_iter();
        let first = it.next().expect("chain of at least one term");
        it.fold(first, |acc, t| Term::App(op, Box::new(acc), Box::new(t)))
    }

    /// `t op t op … op t` with `k` factors.
    pub fn power(op: Op, t: &Term, k: usize) -> Term {
        assert!(k >= 1);
        Term::chain(op, vec![t.clone(); k])
    }

    pub fn max_var(&self) -> Option<usize> {
        match self {
            Term::Var(i) => Some(*i),
            Term::App(_, l, r) => l.max_var().max(r.max_var()),
        }
    }

    /// Value of the term with variable `i` bound to `env[i]`.
    pub fn eval(&self, dot: &CayleyTable, star: &CayleyTable, env: &[usize]) -> usize {
        match self {
            Term::Var(i) => env[*i],
            Term::App(op, l, r) => {
                let a = l.eval(dot, star, env);
                let b = r.eval(dot, star, env);
                match op {
                    Op::Dot => dot.op(a, b),
                    Op::Star => star.op(a, b),
                }
            }
        }
    }

    fn compile(&self, code: &mut Vec<Instr>) {
        match self {
            Term::Var(i) => code.push(Instr::Load(*i)),
            Term::App(op, l, r) => {
                l.compile(code);
                r.compile(code);
                code.push(Instr::Apply(*op));
            }
        }
    }
}

const VAR_NAMES: [&str; 6] = ["x", "y", "z", "u", "v", "w"];

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => match VAR_NAMES.get(*i) {
                Some(s) => write!(f, "{s}"),
                None => write!(f, "x{i}"),
            },
            Term::App(op, l, r) => {
                let sym = match op {
                    Op::Dot => "·",
                    Op::Star => "∗",
                };
                write!(f, "({l}{sym}{r})")
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Instr {
    Load(usize),
    Apply(Op),
}

/// Postfix program for fast repeated evaluation.
struct Compiled(Vec<Instr>);

impl Compiled {
    fn new(t: &Term) -> Self {
        let mut code = Vec::new();
        t.compile(&mut code);
        Compiled(code)
    }

    fn run(
        &self,
        dot: &CayleyTable,
        star: &CayleyTable,
        env: &[usize],
        stack: &mut Vec<usize>,
    ) -> usize {
        stack.clear();
        for ins in &self.0 {
            match *ins {
                Instr::Load(i) => stack.push(env[i]),
                Instr::Apply(op) => {
                    let b = stack.pop().unwrap();
                    let a = stack.pop().unwrap();
                    stack.push(match op {
                        Op::Dot => dot.op(a, b),
                        Op::Star => star.op(a, b),
                    });
                }
            }
        }
        stack[0]
    }
}

/// An equation `lhs = rhs` in `nvars` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
    pub nvars: usize,
}

impl Identity {
    pub fn new(lhs: Term, rhs: Term, nvars: usize) -> Result<Self> {
        let needed = lhs.max_var().max(rhs.max_var()).map_or(0, |m| m + 1);
        if nvars < needed {
            return Err(Error::InvalidArgument(format!(
                "identity uses {needed} variables but declares {nvars}"
            )));
        }
        Ok(Identity { lhs, rhs, nvars })
    }

    /// Both sides evaluated at `env`.
    pub fn sides(&self, dot: &CayleyTable, star: &CayleyTable, env: &[usize]) -> (usize, usize) {
        (self.lhs.eval(dot, star, env), self.rhs.eval(dot, star, env))
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// Checks `id` under every assignment of its variables.
///
/// The witness is the first failing assignment in lexicographic order.
pub fn check_identity(dot: &CayleyTable, star: &CayleyTable, id: &Identity) -> Result<CheckResult> {
    if dot.n() != star.n() {
        return Err(Error::MismatchedCarrier(dot.n(), star.n()));
    }
    let lhs = Compiled::new(&id.lhs);
    let rhs = Compiled::new(&id.rhs);
    let witness = scan::first_failing_assignment(dot.n(), id.nvars, |env| {
        let mut stack = Vec::with_capacity(8);
        lhs.run(dot, star, env, &mut stack) == rhs.run(dot, star, env, &mut stack)
    });
    Ok(CheckResult::from_witness(witness))
}

/// Checks a law that mentions only one operation against that table.
pub fn check_single(t: &CayleyTable, id: &Identity) -> CheckResult {
    check_identity(t, t, id).expect("same table on both sides")
}

/// Standard identities. Laws about a single semigroup are written with
/// the star operation; check them with [`check_single`] when the table
/// plays the role of the dot.
pub mod laws {
    use super::{Identity, Op, Term};

    fn x() -> Term {
        Term::var(0)
    }
    fn y() -> Term {
        Term::var(1)
    }
    fn z() -> Term {
        Term::var(2)
    }
    fn id(l: Term, r: Term, n: usize) -> Identity {
        Identity::new(l, r, n).expect("well-formed law")
    }
    fn s3(a: Term, b: Term, c: Term) -> Term {
        Term::chain(Op::Star, vec![a, b, c])
    }

    /// `x = x`.
    pub fn reflexive() -> Identity {
        id(x(), x(), 1)
    }

    pub fn associative(op: Op) -> Identity {
        let l = Term::App(
            op,
            Box::new(Term::App(op, Box::new(x()), Box::new(y()))),
            Box::new(z()),
        );
        let r = Term::App(
            op,
            Box::new(x()),
            Box::new(Term::App(op, Box::new(y()), Box::new(z()))),
        );
        id(l, r, 3)
    }

    /// `(x∗y)·((x·y)∗z) = x∗(y·z)`.
    pub fn first_pentagon() -> Identity {
        let l = Term::dot(Term::star(x(), y()), Term::star(Term::dot(x(), y()), z()));
        let r = Term::star(x(), Term::dot(y(), z()));
        id(l, r, 3)
    }

    /// `(x∗y)∗((x·y)∗z) = y∗z`.
    pub fn second_pentagon() -> Identity {
        let l = Term::star(Term::star(x(), y()), Term::star(Term::dot(x(), y()), z()));
        let r = Term::star(y(), z());
        id(l, r, 3)
    }

    /// `x∗y^k∗z = x∗z`.
    pub fn p(k: usize) -> Identity {
        let mut f = vec![x()];
        f.extend(std::iter::repeat_with(y).take(k));
        f.push(z());
        id(Term::chain(Op::Star, f), Term::star(x(), z()), 3)
    }

    /// `x∗y^k∗z = y∗z`.
    pub fn q(k: usize) -> Identity {
        let mut f = vec![x()];
        f.extend(std::iter::repeat_with(y).take(k));
        f.push(z());
        id(Term::chain(Op::Star, f), Term::star(y(), z()), 3)
    }

    /// `x∗x∗y = y`.
    pub fn r() -> Identity {
        id(s3(x(), x(), y()), y(), 2)
    }

    /// `x∗y∗z = y∗x∗z`.
    pub fn right_normal() -> Identity {
        id(s3(x(), y(), z()), s3(y(), x(), z()), 3)
    }

    /// `x∗y∗z = x∗z∗y`.
    pub fn left_normal() -> Identity {
        id(s3(x(), y(), z()), s3(x(), z(), y()), 3)
    }

    /// `x∗y = y∗x`.
    pub fn commutative() -> Identity {
        id(Term::star(x(), y()), Term::star(y(), x()), 2)
    }

    /// `x∗x = x`.
    pub fn idempotent() -> Identity {
        id(Term::star(x(), x()), x(), 1)
    }

    /// `x∗y = y`.
    pub fn right_zero() -> Identity {
        id(Term::star(x(), y()), y(), 2)
    }

    /// `(x·y)∗z = x∗z`.
    pub fn ltd() -> Identity {
        id(
            Term::star(Term::dot(x(), y()), z()),
            Term::star(x(), z()),
            3,
        )
    }

    /// `(x·y)∗z = y∗z`.
    pub fn rtd() -> Identity {
        id(
            Term::star(Term::dot(x(), y()), z()),
            Term::star(y(), z()),
            3,
        )
    }

    /// `x∗(y·z) = (x∗y)·(y∗z)`.
    pub fn false_distributive() -> Identity {
        let l = Term::star(x(), Term::dot(y(), z()));
        let r = Term::dot(Term::star(x(), y()), Term::star(y(), z()));
        id(l, r, 3)
    }

    /// `x∗(y·z) = (x∗y)·(x∗z)`.
    pub fn left_distributive() -> Identity {
        let l = Term::star(x(), Term::dot(y(), z()));
        let r = Term::dot(Term::star(x(), y()), Term::star(x(), z()));
        id(l, r, 3)
    }

    /// `x^k∗z = z^(k+1)`, all powers taken in the star operation.
    pub fn power_collapse(k: usize) -> Identity {
        let mut f = vec![x(); k];
        f.push(y());
        id(
            Term::chain(Op::Star, f),
            Term::power(Op::Star, &y(), k + 1),
            2,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex_left_star() -> CayleyTable {
        CayleyTable::from_rows(&[vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]).unwrap()
    }

    #[test]
    fn reflexive_always_holds() {
        let t = CayleyTable::from_rows(&[vec![1, 0], vec![1, 1]]).unwrap();
        assert!(check_single(&t, &laws::reflexive()).holds);
    }

    #[test]
    fn p2_holds_on_small_example() {
        let s = ex_left_star();
        assert!(check_single(&s, &laws::p(2)).holds);
        assert!(check_single(&s, &laws::right_normal()).holds);
    }

    #[test]
    fn witness_replays() {
        let t = CayleyTable::from_rows(&[vec![0, 0], vec![1, 0]]).unwrap();
        let law = laws::associative(Op::Star);
        let r = check_single(&t, &law);
        let w = r.witness.unwrap();
        let (a, b) = law.sides(&t, &t, &w);
        assert_ne!(a, b);
        assert_eq!(w, t.is_associative().witness.unwrap());
    }

    #[test]
    fn mismatched_carriers() {
        let a = CayleyTable::right_zero(2);
        let b = CayleyTable::right_zero(3);
        assert_eq!(
            check_identity(&a, &b, &laws::ltd()),
            Err(Error::MismatchedCarrier(2, 3))
        );
    }

    #[test]
    fn undeclared_variable_rejected() {
        assert!(Identity::new(Term::var(2), Term::var(0), 2).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(laws::ltd().to_string(), "((x·y)∗z) = (x∗z)");
    }
}
