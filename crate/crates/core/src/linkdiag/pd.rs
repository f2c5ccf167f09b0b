use super::{ArcLabel, Diagram, DiagramError};

/// Parses `PD[X[a,b,c,d], ..., loops=k]`. Whitespace is free and `#` starts a
/// comment running to the end of the line.
pub fn parse_pd(text: &str) -> Result<Diagram, DiagramError> {
    let (crossings, loops) = parse_pd_parts(text)?;
    Diagram::new(crossings, loops)
}

pub(crate) fn parse_pd_parts(text: &str) -> Result<(Vec<[ArcLabel; 4]>, u32), DiagramError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    p.keyword("PD")?;
    p.expect(b'[')?;
    let mut crossings = Vec::new();
    let mut loops = None;
    if !p.eat(b']') {
        loop {
            p.skip_ws();
            match p.peek() {
                Some(b'X') => {
                    p.pos += 1;
                    p.expect(b'[')?;
                    let mut q = [0; 4];
                    for (i, slot) in q.iter_mut().enumerate() {
                        if i > 0 {
                            p.expect(b',')?;
                        }
                        *slot = p.number()?;
                    }
                    p.expect(b']')?;
                    crossings.push(q);
                }
                Some(b'l') => {
                    p.keyword("loops")?;
                    p.expect(b'=')?;
                    if loops.is_some() {
                        return Err(p.err("loops declared twice"));
                    }
                    loops = Some(p.number()?);
                }
                _ => return Err(p.err("expected X[...] or loops=k")),
            }
            if p.eat(b']') {
                break;
            }
            p.expect(b',')?;
        }
    }
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok((crossings, loops.unwrap_or(0)))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> DiagramError {
        DiagramError::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.src.get(self.pos) {
            if c == b'#' {
                while self.pos < self.src.len() && self.src[self.pos] != b'\n' {
                    self.pos += 1;
                }
            } else if c.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), DiagramError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), DiagramError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            Ok(())
        } else {
            Err(self.err(&format!("expected '{kw}'")))
        }
    }

    fn number(&mut self) -> Result<u32, DiagramError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        if digits.is_empty() {
            self.pos = start;
            return Err(self.err("expected a non-negative integer"));
        }
        digits.parse().map_err(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }
}
