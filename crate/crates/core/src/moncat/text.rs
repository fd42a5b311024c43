//! Text form: `id[X,Y]`, `swap[X,Y;0]`, `(e1 ; e2)` for composition, `(e1 * e2)` for tensor.

use std::fmt;

use super::{MoncatError, ObjectWord, SymExpr};

impl fmt::Display for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymExpr::Identity(w) => write!(f, "id{w}"),
            SymExpr::AdjacentSwap(w, i) => write!(f, "swap[{};{i}]", w.0.join(",")),
            SymExpr::Compose(a, b) => write!(f, "({a} ; {b})"),
            SymExpr::Tensor(a, b) => write!(f, "({a} * {b})"),
        }
    }
}

impl std::str::FromStr for SymExpr {
    type Err = MoncatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_expr(s)
    }
}

/// Parses the text form. The result is not checked for well-formedness; call
/// [`SymExpr::codomain`] for that.
pub fn parse_expr(text: &str) -> Result<SymExpr, MoncatError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(e)
}

/// Parses a bracketed word such as `[X,Y]` or `[]`.
pub fn parse_word(text: &str) -> Result<ObjectWord, MoncatError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    p.skip_ws();
    p.expect(b'[')?;
    let (w, close) = p.atoms()?;
    if close != b']' {
        return Err(p.error("expected ']'"));
    }
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(w)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> MoncatError {
        MoncatError::Parse { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), MoncatError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn keyword(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("")
    }

    fn name(&mut self) -> Result<String, MoncatError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() {
            let c = self.src[self.pos];
            if c.is_ascii_alphanumeric() || c == b'_' || c == b'^' || c == b'\'' {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err(self.error("expected an atom name"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    /// Atoms after an opening bracket, up to and including `]` or `;`.
    fn atoms(&mut self) -> Result<(ObjectWord, u8), MoncatError> {
        let mut atoms = Vec::new();
        if let Some(c @ (b']' | b';')) = self.peek() {
            self.pos += 1;
            return Ok((ObjectWord(atoms), c));
        }
        loop {
            atoms.push(self.name()?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(c @ (b']' | b';')) => {
                    self.pos += 1;
                    return Ok((ObjectWord(atoms), c));
                }
                _ => return Err(self.error("expected ',', ';' or ']'")),
            }
        }
    }

    fn index(&mut self) -> Result<usize, MoncatError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.error("expected a swap position"))
    }

    fn expr(&mut self) -> Result<SymExpr, MoncatError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let left = self.expr()?;
                let op = self.peek();
                if !matches!(op, Some(b';' | b'*')) {
                    return Err(self.error("expected ';' or '*'"));
                }
                self.pos += 1;
                let right = self.expr()?;
                self.expect(b')')?;
                Ok(if op == Some(b';') { left.then(right) } else { left.tensor(right) })
            }
            Some(_) => {
                let at = self.pos;
                match self.keyword() {
                    "id" => {
                        self.expect(b'[')?;
                        match self.atoms()? {
                            (w, b']') => Ok(SymExpr::Identity(w)),
                            _ => Err(self.error("identity takes no position")),
                        }
                    }
                    "swap" => {
                        self.expect(b'[')?;
                        let (w, close) = self.atoms()?;
                        if close != b';' {
                            return Err(self.error("swap needs ';<position>'"));
                        }
                        let i = self.index()?;
                        self.expect(b']')?;
                        Ok(SymExpr::AdjacentSwap(w, i))
                    }
                    _ => {
                        self.pos = at;
                        Err(self.error("expected 'id', 'swap' or '('"))
                    }
                }
            }
            None => Err(self.error("unexpected end of input")),
        }
    }
}
