//! The expression mini-language.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := '-' unary | primary
//! primary := rational | word | index | '(' expr ')' | name | name '(' args ')'
//! ```
//!
//! Word literals use the element text format (`[z1,z2]`, `[1,z1]`, `[e]`);
//! index literals are `()` or comma-separated naturals such as `(2,0,1)`.

use std::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, ParseError, Result};
use crate::hopf::{antipode, coproduct_element, counit, TensorSquare};
use crate::kernel::format::Cursor;
use crate::kernel::{format_coeff, Alphabet, Coeff, Element, Word};
use crate::products::{augmented_product, shuffle_recursive, Product};
use crate::rota_baxter::{p_a, p_v};
use crate::structure::{f_tilde, g_inverse, g_rescale, one_shuffled, IndexSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Sh,
    Qsh,
    Msh,
    Aug,
    Conc,
    P,
    Pv,
    Coprod,
    Counit,
    Antipode,
    G,
    Ginv,
    Fwd,
    Oneshuf,
    Ssupp,
}

const FUNCTIONS: [(&str, Func); 15] = [
    ("sh", Func::Sh),
    ("qsh", Func::Qsh),
    ("msh", Func::Msh),
    ("aug", Func::Aug),
    ("conc", Func::Conc),
    ("P", Func::P),
    ("Pv", Func::Pv),
    ("coprod", Func::Coprod),
    ("counit", Func::Counit),
    ("antipode", Func::Antipode),
    ("g", Func::G),
    ("ginv", Func::Ginv),
    ("fwd", Func::Fwd),
    ("oneshuf", Func::Oneshuf),
    ("ssupp", Func::Ssupp),
];

impl Func {
    fn lookup(name: &str) -> Option<Func> {
        FUNCTIONS.iter().find(|(n, _)| *n == name).map(|(_, f)| *f)
    }

    pub fn name(self) -> &'static str {
        FUNCTIONS.iter().find(|(_, f)| *f == self).map(|(n, _)| *n).unwrap()
    }

    /// Accepted argument counts, inclusive.
    fn arity(self) -> (usize, usize) {
        match self {
            Func::Sh | Func::Qsh | Func::Msh | Func::Aug | Func::Conc | Func::Pv => (2, 2),
            Func::Antipode => (1, 2),
            _ => (1, 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Number(Coeff),
    Word(Word),
    Index(IndexSequence),
    /// A bare identifier: a letter for `Pv`, a product for `antipode`.
    Name(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Call(Func, Vec<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub node: Node,
    pub line: usize,
    pub column: usize,
}

struct Parser<'a> {
    cur: Cursor,
    alphabet: &'a Alphabet,
}

type PResult<T> = std::result::Result<T, Error>;

impl Parser<'_> {
    fn at(&self, node: Node, (line, column): (usize, usize)) -> Expr {
        Expr { node, line, column }
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            self.cur.skip_ws();
            let pos = self.cur.position();
            match self.cur.peek() {
                Some('+') => {
                    self.cur.bump();
                    let rhs = self.term()?;
                    lhs = self.at(Node::Add(Box::new(lhs), Box::new(rhs)), pos);
                }
                Some('-') => {
                    self.cur.bump();
                    let rhs = self.term()?;
                    lhs = self.at(Node::Sub(Box::new(lhs), Box::new(rhs)), pos);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.unary()?;
        loop {
            self.cur.skip_ws();
            let pos = self.cur.position();
            if self.cur.peek() != Some('*') {
                return Ok(lhs);
            }
            self.cur.bump();
            let rhs = self.unary()?;
            lhs = self.at(Node::Mul(Box::new(lhs), Box::new(rhs)), pos);
        }
    }

    fn unary(&mut self) -> PResult<Expr> {
        self.cur.skip_ws();
        let pos = self.cur.position();
        if self.cur.peek() == Some('-') {
            self.cur.bump();
            let inner = self.unary()?;
            return Ok(self.at(Node::Neg(Box::new(inner)), pos));
        }
        self.primary()
    }

    /// `()` or `(n, n, ...)` with at least one comma; `None` restores the cursor.
    fn index_literal(&mut self) -> Option<IndexSequence> {
        let save = self.cur.clone();
        self.cur.bump();
        self.cur.skip_ws();
        if self.cur.peek() == Some(')') {
            self.cur.bump();
            return Some(IndexSequence::default());
        }
        let mut entries = Vec::new();
        loop {
            self.cur.skip_ws();
            let n = self.cur.digits().ok().and_then(|d| usize::try_from(d).ok());
            self.cur.skip_ws();
            match (n, self.cur.peek()) {
                (Some(n), Some(',')) => {
                    entries.push(n);
                    self.cur.bump();
                }
                (Some(n), Some(')')) if !entries.is_empty() => {
                    entries.push(n);
                    self.cur.bump();
                    return Some(IndexSequence::new(entries));
                }
                _ => {
                    self.cur = save;
                    return None;
                }
            }
        }
    }

    fn primary(&mut self) -> PResult<Expr> {
        self.cur.skip_ws();
        let pos = self.cur.position();
        match self.cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                let q = self.cur.rational()?;
                Ok(self.at(Node::Number(q), pos))
            }
            Some('[') => {
                let w = self.cur.word(self.alphabet)?;
                Ok(self.at(Node::Word(w), pos))
            }
            Some('(') => {
                if let Some(index) = self.index_literal() {
                    return Ok(self.at(Node::Index(index), pos));
                }
                self.cur.bump();
                let inner = self.expr()?;
                self.cur.skip_ws();
                self.cur.expect(')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let name = self.cur.ident().expect("starts with a letter");
                self.cur.skip_ws();
                if self.cur.peek() != Some('(') {
                    return Ok(self.at(Node::Name(name), pos));
                }
                let func = Func::lookup(&name).ok_or_else(|| {
                    let names: Vec<&str> = FUNCTIONS.iter().map(|(n, _)| *n).collect();
                    ParseError::new(pos.0, pos.1, format!("unknown function `{name}`")).expecting(&names)
                })?;
                self.cur.bump();
                let mut args = Vec::new();
                self.cur.skip_ws();
                if self.cur.peek() == Some(')') {
                    self.cur.bump();
                } else {
                    loop {
                        args.push(self.expr()?);
                        self.cur.skip_ws();
                        match self.cur.peek() {
                            Some(',') => self.cur.bump(),
                            Some(')') => {
                                self.cur.bump();
                                break;
                            }
                            _ => return Err(self.cur.error("expected `,` or `)`", &[",", ")"]).into()),
                        }
                    }
                }
                let (lo, hi) = func.arity();
                if args.len() < lo || args.len() > hi {
                    let want = if lo == hi { lo.to_string() } else { format!("{lo} or {hi}") };
                    return Err(ParseError::new(
                        pos.0,
                        pos.1,
                        format!("`{name}` takes {want} argument(s), got {}", args.len()),
                    )
                    .into());
                }
                Ok(self.at(Node::Call(func, args), pos))
            }
            None => Err(self
                .cur
                .error("unexpected end of input", &["number", "[", "(", "-", "function"])
                .into()),
            Some(c) => Err(self
                .cur
                .error(&format!("unexpected `{c}`"), &["number", "[", "(", "-", "function"])
                .into()),
        }
    }
}

/// Parses `text`; word literals are resolved against `alphabet`.
pub fn parse_expression(text: &str, alphabet: &Alphabet) -> Result<Expr> {
    let mut p = Parser {
        cur: Cursor::new(text),
        alphabet,
    };
    let e = p.expr()?;
    p.cur.skip_ws();
    if !p.cur.at_end() {
        return Err(p.cur.error("unexpected trailing input", &["+", "-", "*", "end of input"]).into());
    }
    Ok(e)
}

/// Result of evaluating an expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(Coeff),
    Element(Element),
    Tensor(TensorSquare),
    Index(IndexSequence),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Element(_) => "element",
            Value::Tensor(_) => "tensor square",
            Value::Index(_) => "index sequence",
        }
    }

    /// Scalars are read as multiples of the empty word.
    pub fn into_element(self) -> Result<Element> {
        match self {
            Value::Element(e) => Ok(e),
            Value::Scalar(c) => Ok(Element::term(Word::empty(), c)),
            other => Err(Error::Type(format!("expected an element, found a {}", other.kind()))),
        }
    }

    fn into_index(self) -> Result<IndexSequence> {
        match self {
            Value::Index(i) => Ok(i),
            Value::Scalar(c) if c.is_integer() && !c.is_negative() => {
                let n = usize::try_from(c.to_integer()).map_err(|_| Error::Type("index entry too large".into()))?;
                Ok(IndexSequence::new(vec![n]))
            }
            other => Err(Error::Type(format!("expected an index sequence, found a {}", other.kind()))),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(c) => write!(f, "{}", format_coeff(c)),
            Value::Element(e) => write!(f, "{e}"),
            Value::Tensor(t) => write!(f, "{t}"),
            Value::Index(i) => write!(f, "{i}"),
        }
    }
}

/// Evaluates `expr`; `lambda` is the weight used by `msh`, `aug`,
/// `antipode`, `g` and `ginv`.
pub fn evaluate(expr: &Expr, alphabet: &Alphabet, lambda: &Coeff) -> Result<Value> {
    Evaluator { alphabet, lambda }.eval(expr)
}

struct Evaluator<'a> {
    alphabet: &'a Alphabet,
    lambda: &'a Coeff,
}

fn located(expr: &Expr, e: Error) -> Error {
    match e {
        Error::Eval { .. } => e,
        other => Error::Eval {
            line: expr.line,
            column: expr.column,
            source: Box::new(other),
        },
    }
}

impl Evaluator<'_> {
    fn eval(&self, expr: &Expr) -> Result<Value> {
        self.eval_inner(expr).map_err(|e| located(expr, e))
    }

    fn element(&self, expr: &Expr) -> Result<Element> {
        self.eval(expr)?.into_element().map_err(|e| located(expr, e))
    }

    fn eval_inner(&self, expr: &Expr) -> Result<Value> {
        Ok(match &expr.node {
            Node::Number(q) => Value::Scalar(q.clone()),
            Node::Word(w) => Value::Element(Element::word(w.clone())),
            Node::Index(i) => Value::Index(i.clone()),
            Node::Name(n) => return Err(Error::Type(format!("`{n}` is not a value"))),
            Node::Neg(inner) => match self.eval(inner)? {
                Value::Scalar(c) => Value::Scalar(-c),
                Value::Element(e) => Value::Element(-e),
                Value::Tensor(t) => {
                    let mut out = TensorSquare::zero();
                    out.add_scaled(&t, &-Coeff::one());
                    Value::Tensor(out)
                }
                Value::Index(_) => return Err(Error::Type("cannot negate an index sequence".into())),
            },
            Node::Add(a, b) => self.sum(self.eval(a)?, self.eval(b)?, Coeff::one())?,
            Node::Sub(a, b) => self.sum(self.eval(a)?, self.eval(b)?, -Coeff::one())?,
            Node::Mul(a, b) => match (self.eval(a)?, self.eval(b)?) {
                (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x * y),
                (Value::Scalar(c), Value::Element(e)) | (Value::Element(e), Value::Scalar(c)) => {
                    Value::Element(e.scale(&c))
                }
                (Value::Scalar(c), Value::Tensor(t)) | (Value::Tensor(t), Value::Scalar(c)) => {
                    let mut out = TensorSquare::zero();
                    out.add_scaled(&t, &c);
                    Value::Tensor(out)
                }
                (x, y) => {
                    return Err(Error::Type(format!(
                        "`*` multiplies by scalars only ({} * {}); use a product function",
                        x.kind(),
                        y.kind()
                    )))
                }
            },
            Node::Call(func, args) => self.call(*func, args)?,
        })
    }

    fn sum(&self, a: Value, b: Value, sign: Coeff) -> Result<Value> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + y * sign),
            (Value::Tensor(x), Value::Tensor(y)) => {
                let mut out = x;
                out.add_scaled(&y, &sign);
                Value::Tensor(out)
            }
            (a @ (Value::Scalar(_) | Value::Element(_)), b @ (Value::Scalar(_) | Value::Element(_))) => {
                let mut out = a.into_element()?;
                out.add_scaled(&b.into_element()?, &sign);
                Value::Element(out)
            }
            (x, y) => return Err(Error::Type(format!("cannot add a {} and a {}", x.kind(), y.kind()))),
        })
    }

    fn product_arg(&self, expr: &Expr) -> Result<Product> {
        match &expr.node {
            Node::Name(n) if n == "sh" => Ok(Product::Shuffle),
            Node::Name(n) if n == "qsh" => Ok(Product::QuasiShuffle),
            Node::Name(n) if n == "msh" => Ok(Product::Mixable(self.lambda.clone())),
            _ => Err(located(expr, Error::Type("expected one of `sh`, `qsh`, `msh`".into()))),
        }
    }

    fn call(&self, func: Func, args: &[Expr]) -> Result<Value> {
        let a = self.alphabet;
        let binary = |p: Product| -> Result<Value> {
            let x = self.element(&args[0])?;
            let y = self.element(&args[1])?;
            Ok(Value::Element(p.apply(&x, &y, a)?))
        };
        match func {
            Func::Sh => {
                let x = self.element(&args[0])?;
                let y = self.element(&args[1])?;
                Ok(Value::Element(x.bilinear(&y, |u, v| Ok(shuffle_recursive(u, v)))?))
            }
            Func::Qsh => binary(Product::QuasiShuffle),
            Func::Msh => binary(Product::Mixable(self.lambda.clone())),
            Func::Conc => binary(Product::Concatenation),
            Func::Aug => {
                let x = self.element(&args[0])?;
                let y = self.element(&args[1])?;
                Ok(Value::Element(augmented_product(&x, &y, self.lambda, a)?))
            }
            Func::P => Ok(Value::Element(p_a(&self.element(&args[0])?)?)),
            Func::Pv => {
                let Node::Name(name) = &args[0].node else {
                    return Err(located(&args[0], Error::Type("expected a letter name".into())));
                };
                let v = a.letter(name).map_err(|e| located(&args[0], e))?;
                Ok(Value::Element(p_v(&v, &self.element(&args[1])?)?))
            }
            Func::Coprod => Ok(Value::Tensor(coproduct_element(&self.element(&args[0])?))),
            Func::Counit => Ok(Value::Scalar(counit(&self.element(&args[0])?))),
            Func::Antipode => {
                let product = match args.get(1) {
                    Some(p) => self.product_arg(p)?,
                    None => Product::Mixable(self.lambda.clone()),
                };
                Ok(Value::Element(antipode(&self.element(&args[0])?, &product, a)?))
            }
            Func::G => Ok(Value::Element(g_rescale(&self.element(&args[0])?, self.lambda)?)),
            Func::Ginv => Ok(Value::Element(g_inverse(&self.element(&args[0])?, self.lambda)?)),
            Func::Fwd => Ok(Value::Element(self.element(&args[0])?.linear(f_tilde)?)),
            Func::Oneshuf => {
                let i = self.eval(&args[0])?.into_index().map_err(|e| located(&args[0], e))?;
                Ok(Value::Element(one_shuffled(&i, a)?))
            }
            Func::Ssupp => {
                let i = self.eval(&args[0])?.into_index().map_err(|e| located(&args[0], e))?;
                Ok(Value::Index(i.ssupp()))
            }
        }
    }
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str, alphabet: &Alphabet, lambda: &Coeff) -> Result<Value> {
    evaluate(&parse_expression(text, alphabet)?, alphabet, lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{canonical_serialize, int, parse_element};

    fn run(text: &str) -> String {
        eval_str(text, &Alphabet::stuffle(), &int(1)).unwrap().to_string()
    }

    fn err(text: &str) -> Error {
        eval_str(text, &Alphabet::stuffle(), &int(1)).unwrap_err()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(run("msh([z1],[z1])"), "[z2] + 2*[z1,z1]");
        assert_eq!(run("counit([e])"), "1");
        assert_eq!(run("ssupp((2,0,1))"), "(2,1)");
        assert_eq!(run("2*[z1,z2] + [z3]"), "[z3] + 2*[z1,z2]");
    }

    #[test]
    fn parse_shapes() {
        let a = Alphabet::stuffle();
        let e = parse_expression("msh([z1],[z1])", &a).unwrap();
        assert!(matches!(e.node, Node::Call(Func::Msh, ref args) if args.len() == 2));
        let e = parse_expression("2*[z1,z2] + [z3]", &a).unwrap();
        let Node::Add(lhs, _) = e.node else { panic!() };
        assert!(matches!(lhs.node, Node::Mul(..)));
    }

    #[test]
    fn arity_and_unknown_function() {
        let Error::Parse(p) = err("msh([z1])") else { panic!() };
        assert_eq!((p.line, p.column), (1, 1));
        assert!(p.message.contains("takes 2"));
        let Error::Parse(p) = err("  frob([z1])") else { panic!() };
        assert_eq!(p.column, 3);
        assert!(p.message.contains("unknown function"));
    }

    #[test]
    fn unknown_letter_has_position() {
        let e = eval_str("[z1] +\n  [q]", &Alphabet::stuffle(), &int(1)).unwrap_err();
        assert!(matches!(e, Error::Eval { line: 2, column: 4, .. }), "{e:?}");
    }

    #[test]
    fn syntax_error_lists_expected_tokens() {
        let Error::Parse(p) = err("[z1] + ") else { panic!() };
        assert!(!p.expected.is_empty());
        assert!(matches!(err("[z1] [z2]"), Error::Parse(_)));
        assert!(matches!(err("(1,2"), Error::Parse(_)));
    }

    #[test]
    fn operations() {
        assert_eq!(run("sh([z1],[z2])"), "[z1,z2] + [z2,z1]");
        assert_eq!(run("qsh([z1],[z1])"), "[z2] + 2*[z1,z1]");
        assert_eq!(run("conc([z1],[z2])"), "[z1,z2]");
        assert_eq!(run("P([z1])"), "[1,z1]");
        assert_eq!(run("Pv(z1, [z2])"), "[z1,z2]");
        assert_eq!(run("coprod([z1])"), "([e],[z1]) + ([z1],[e])");
        assert_eq!(run("antipode([z1,z1])"), "[z2] + [z1,z1]");
        assert_eq!(run("antipode([z1,z1], sh)"), "[z1,z1]");
        assert_eq!(run("fwd([z1,z2])"), "[z1,z2]");
        assert_eq!(run("oneshuf((2,0,1))"), "[1,z2,z1] + [z2,1,z1] + [z2,z1,1]");
        assert_eq!(run("ssupp((0,0))"), "()");
        assert_eq!(run("ssupp(3)"), "(3)");
        assert_eq!(run("1/2 - 3/4"), "-1/4");
        assert_eq!(run("-(2*[z1]) * 3"), "-6*[z1]");
        assert_eq!(run("[z1] - [z1]"), "0");
        assert_eq!(run("2 + [z1]"), "2*[e] + [z1]");
        let lam = crate::kernel::ratio(1, 2);
        let a = Alphabet::stuffle();
        assert_eq!(eval_str("g([z1,z2])", &a, &lam).unwrap().to_string(), "1/4*[z1,z2]");
        assert_eq!(eval_str("ginv(g([z1,z2]))", &a, &lam).unwrap().to_string(), "[z1,z2]");
        assert_eq!(eval_str("aug([1,1],[1,1])", &a, &lam).unwrap().to_string(), "1/2*[1,1] + 2*[1,1,1]");
    }

    #[test]
    fn type_errors() {
        assert!(matches!(err("[z1] * [z2]"), Error::Eval { .. }));
        assert!(matches!(err("coprod([z1]) + [z1]"), Error::Eval { .. }));
        let e = eval_str("ginv([z1])", &Alphabet::stuffle(), &int(0)).unwrap_err();
        let Error::Eval { source, .. } = e else { panic!() };
        assert_eq!(*source, Error::ZeroLambdaInverse);
    }

    #[test]
    fn serialized_elements_evaluate_back() {
        let a = Alphabet::stuffle();
        for text in ["[z2] + 2*[z1,z1]", "-3/4*[e] + -1*[1,z1]", "0", "[e]"] {
            let e = parse_element(text, &a).unwrap();
            let back = eval_str(&canonical_serialize(&e), &a, &int(1)).unwrap().into_element().unwrap();
            assert_eq!(back, e);
        }
    }
}
