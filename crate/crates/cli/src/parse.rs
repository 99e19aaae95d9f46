//! Query parsing: `J(-2,3,3)`, `K(1,0,2)`, `S(1^2,4)`, `R(2)`,
//! `kappa(1,6)`, `multi(2,2)`.
//!
//! The grammar is whitespace-insensitive and case-insensitive in the head
//! name. Syntax errors carry the byte position of the offending character;
//! structurally valid queries whose arguments violate a domain constraint
//! (e.g. `J(-3,1,1)`) surface the constraint instead.

use polyzeta_core::sums::EulerSumSpec;
use polyzeta_core::IntegralSpec;

/// A parsed query target.
#[derive(Clone, Debug, PartialEq)]
pub enum Target {
    Integral(IntegralSpec),
    Sum(EulerSumSpec),
    /// R(q): the residue expression of the cubed pole series.
    Residue(u32),
    /// A κ_{r,q} generator (r ≥ 1, q ≥ 2, r+q odd).
    Kappa(u32, u32),
}

/// Parse failure.
#[derive(Clone, Debug, PartialEq)]
pub enum QueryError {
    Syntax { position: usize, message: String },
    Domain(String),
}

impl std::fmt::Display for QueryError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QueryError::Syntax { position, message } => {
                write!(f, "syntax error at position {position}: {message}")
            }
            QueryError::Domain(message) => write!(f, "domain error: {message}"),
        }
    }
}

impl std::error::Error for QueryError {}

impl From<polyzeta_core::Error> for QueryError {
    fn from(e: polyzeta_core::Error) -> Self {
        match e {
            // Reuse the message bare: our Display adds the "domain error" tag.
            polyzeta_core::Error::Domain(m) => QueryError::Domain(m),
            other => QueryError::Domain(other.to_string()),
        }
    }
}

/// One argument token: an integer, optionally `base^exponent`.
#[derive(Clone, Copy)]
struct Arg {
    value: i64,
    exponent: Option<i64>,
    position: usize,
}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T, QueryError> {
        Err(QueryError::Syntax { position: self.pos, message: message.into() })
    }

    fn expect(&mut self, ch: u8) -> Result<(), QueryError> {
        self.skip_ws();
        if self.peek() == Some(ch) {
            self.pos += 1;
            Ok(())
        } else {
            self.syntax(format!("expected '{}'", ch as char))
        }
    }

    fn ident(&mut self) -> Result<(usize, String), QueryError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.syntax("expected a target name");
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string();
        Ok((start, name))
    }

    fn integer(&mut self) -> Result<i64, QueryError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return self.syntax("expected an integer");
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse::<i64>().map_err(|_| {
            QueryError::Syntax { position: start, message: "integer out of range".into() }
        })
    }

    /// integer, optionally with a `^exponent` suffix.
    fn arg(&mut self) -> Result<Arg, QueryError> {
        self.skip_ws();
        let position = self.pos;
        let value = self.integer()?;
        self.skip_ws();
        let exponent = if self.peek() == Some(b'^') {
            self.pos += 1;
            Some(self.integer()?)
        } else {
            None
        };
        Ok(Arg { value, exponent, position })
    }

    fn args(&mut self) -> Result<Vec<Arg>, QueryError> {
        self.expect(b'(')?;
        let mut out = vec![self.arg()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                    out.push(self.arg()?);
                }
                Some(b')') => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return self.syntax("expected ',' or ')'"),
            }
        }
    }

    fn finish(&mut self) -> Result<(), QueryError> {
        self.skip_ws();
        if self.pos < self.src.len() {
            self.syntax("unexpected trailing input")
        } else {
            Ok(())
        }
    }
}

fn plain(arg: &Arg) -> Result<i64, QueryError> {
    if arg.exponent.is_some() {
        Err(QueryError::Syntax {
            position: arg.position,
            message: "'^' is only valid in the first argument of S".into(),
        })
    } else {
        Ok(arg.value)
    }
}

fn to_u32(v: i64, what: &str) -> Result<u32, QueryError> {
    u32::try_from(v).map_err(|_| QueryError::Domain(format!("{what} must be >= 0, got {v}")))
}

fn to_i32(v: i64, what: &str) -> Result<i32, QueryError> {
    i32::try_from(v).map_err(|_| QueryError::Domain(format!("{what} out of range: {v}")))
}

fn arity<'a>(args: &'a [Arg], n: usize, head: &str) -> Result<&'a [Arg], QueryError> {
    if args.len() == n {
        Ok(args)
    } else {
        Err(QueryError::Domain(format!(
            "{head} takes {n} argument{}, got {}",
            if n == 1 { "" } else { "s" },
            args.len()
        )))
    }
}

/// Parse a query string into a target.
pub fn parse_target(input: &str) -> Result<Target, QueryError> {
    let mut sc = Scanner::new(input);
    let (head_pos, head) = sc.ident()?;
    let args = sc.args()?;
    sc.finish()?;
    let lower = head.to_ascii_lowercase();
    match lower.as_str() {
        "j" => {
            let a = arity(&args, 3, "J")?;
            let m = to_i32(plain(&a[0])?, "m")?;
            let p = to_u32(plain(&a[1])?, "p")?;
            let q = to_u32(plain(&a[2])?, "q")?;
            Ok(Target::Integral(IntegralSpec::j(m, p, q)?))
        }
        "j0" => {
            let a = arity(&args, 2, "J0")?;
            let m = to_i32(plain(&a[0])?, "m")?;
            let q = to_u32(plain(&a[1])?, "q")?;
            Ok(Target::Integral(IntegralSpec::j0(m, q)?))
        }
        "k" => {
            let a = arity(&args, 3, "K")?;
            let r = to_u32(plain(&a[0])?, "r")?;
            let p = to_u32(plain(&a[1])?, "p")?;
            let q = to_u32(plain(&a[2])?, "q")?;
            Ok(Target::Integral(IntegralSpec::k(r, p, q)?))
        }
        "l" => {
            let a = arity(&args, 3, "L")?;
            let m = to_i32(plain(&a[0])?, "m")?;
            let r = to_u32(plain(&a[1])?, "r")?;
            let p = to_u32(plain(&a[2])?, "p")?;
            Ok(Target::Integral(IntegralSpec::l(m, r, p)?))
        }
        "multi" => {
            let a = arity(&args, 2, "multi")?;
            let p = to_u32(plain(&a[0])?, "p")?;
            let q = to_u32(plain(&a[1])?, "q")?;
            Ok(Target::Integral(IntegralSpec::multi(p, q)?))
        }
        "s" => {
            let a = arity(&args, 2, "S")?;
            let q = to_u32(plain(&a[1])?, "q")?;
            match a[0].exponent {
                None => {
                    let r = to_u32(a[0].value, "r")?;
                    Ok(Target::Sum(EulerSumSpec::new(r, 1, q)?))
                }
                Some(2) if a[0].value == 1 => Ok(Target::Sum(EulerSumSpec::new(1, 2, q)?)),
                Some(_) => Err(QueryError::Domain(
                    "only the squared first index is supported: S(1^2,q)".into(),
                )),
            }
        }
        "r" => {
            let a = arity(&args, 1, "R")?;
            let q = to_u32(plain(&a[0])?, "q")?;
            Ok(Target::Residue(q))
        }
        "kappa" => {
            let a = arity(&args, 2, "kappa")?;
            let r = to_u32(plain(&a[0])?, "r")?;
            let q = to_u32(plain(&a[1])?, "q")?;
            if r < 1 || q < 2 || (r + q) % 2 == 0 {
                Err(QueryError::Domain(format!(
                    "kappa({r},{q}) is not a generator: need r >= 1, q >= 2, r+q odd"
                )))
            } else {
                Ok(Target::Kappa(r, q))
            }
        }
        _ => Err(QueryError::Syntax {
            position: head_pos,
            message: format!(
                "unknown target '{head}'; expected J, J0, K, L, S, R, kappa, or multi"
            ),
        }),
    }
}

/// Parse a table selection: `"3"`, `"1..9"`, `"2,5,9"`, or combinations.
pub fn parse_table_range(input: &str) -> Result<Vec<u8>, QueryError> {
    let mut out = std::collections::BTreeSet::new();
    for token in input.split(',') {
        let t: String = token.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(QueryError::Domain("empty table selection".into()));
        }
        let (lo, hi) = match t.split_once("..") {
            Some((a, b)) => (a, b),
            None => (t.as_str(), t.as_str()),
        };
        let parse_num = |s: &str| -> Result<u8, QueryError> {
            s.parse::<u8>()
                .map_err(|_| QueryError::Domain(format!("invalid table number '{s}' in '{token}'")))
        };
        let (lo, hi) = (parse_num(lo)?, parse_num(hi)?);
        if lo < 1 || hi > 9 || lo > hi {
            return Err(QueryError::Domain(format!("table selection '{token}' outside 1..9")));
        }
        out.extend(lo..=hi);
    }
    Ok(out.into_iter().collect())
}
