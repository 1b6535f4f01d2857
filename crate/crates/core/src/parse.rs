//! Text parsers for multisegments, multicharges and multipartitions.
//!
//! Grammar (whitespace-insensitive, positions reported in bytes):
//!
//! ```text
//! multisegment := term ("+" term)* | "" | "∅"
//! term         := [int "*"] segment            (a bare "2[3;3)" also works)
//! segment      := "[" int ";" int ")"          head;length
//!               | "(" int ";" int "]"          length;tail
//!               | "[" int ("," int)* "]"       residue list, consecutive mod e
//! multicharge  := int ("," int)*
//! multipartition := comp ("|" comp)*
//! comp         := "-" | int ("." int)*
//! ```
//!
//! Residues out of range reduce modulo `e`; lengths below 1 are errors.
//! Formatting emits the canonical head form with `k*` multiplicities, so
//! `format ∘ parse` canonicalizes and `parse ∘ format` is the identity.

use crate::context::{CrystalContext, Residue};
use crate::error::Error;
use crate::fock::MultiPartition;
use crate::multicharge::Multicharge;
use crate::multisegment::{Multisegment, Segment};

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn expect(&mut self, want: u8) -> Result<(), Error> {
        match self.peek() {
            Some(b) if b == want => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(Error::parse(
                self.pos,
                format!("expected '{}', found '{}'", want as char, b as char),
            )),
            None => Err(Error::parse(
                self.pos,
                format!("expected '{}', found end of input", want as char),
            )),
        }
    }

    fn int(&mut self) -> Result<i64, Error> {
        self.skip_ws();
        let start = self.pos;
        let mut end = start;
        if self.bytes.get(end) == Some(&b'-') {
            end += 1;
        }
        while self.bytes.get(end).is_some_and(|b| b.is_ascii_digit()) {
            end += 1;
        }
        let text = std::str::from_utf8(&self.bytes[start..end]).unwrap();
        if text.is_empty() || text == "-" {
            return Err(Error::parse(start, "expected an integer"));
        }
        let value: i64 = text
            .parse()
            .map_err(|_| Error::parse(start, format!("integer '{text}' out of range")))?;
        self.pos = end;
        Ok(value)
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn fail_here<T>(&mut self, msg: &str) -> Result<T, Error> {
        self.skip_ws();
        Err(Error::parse(self.pos, msg.to_string()))
    }

    // Consumes the UTF-8 empty-set sign if present.
    fn eat_empty_sign(&mut self) -> bool {
        self.skip_ws();
        let sign = "∅".as_bytes();
        if self.bytes[self.pos..].starts_with(sign) {
            self.pos += sign.len();
            true
        } else {
            false
        }
    }
}

fn parse_segment(cur: &mut Cursor, ctx: &CrystalContext) -> Result<Segment, Error> {
    match cur.peek() {
        Some(b'[') => {
            cur.bump();
            let first = cur.int()?;
            match cur.peek() {
                Some(b';') => {
                    cur.bump();
                    let len_pos = cur.pos;
                    let length = cur.int()?;
                    cur.expect(b')')?;
                    if length < 1 {
                        return Err(Error::parse(len_pos, "segment length must be at least 1"));
                    }
                    Ok(Segment::new(ctx.residue(first), length as usize))
                }
                Some(b',') | Some(b']') => {
                    let mut residues: Vec<Residue> = vec![ctx.residue(first)];
                    while cur.peek() == Some(b',') {
                        cur.bump();
                        residues.push(ctx.residue(cur.int()?));
                    }
                    cur.expect(b']')?;
                    for (k, w) in residues.windows(2).enumerate() {
                        if ctx.succ(w[0]) != w[1] {
                            return Err(Error::parse(
                                cur.pos,
                                format!(
                                    "residue list is not consecutive mod {}: position {} has {} after {}",
                                    ctx.e(),
                                    k + 2,
                                    w[1],
                                    w[0]
                                ),
                            ));
                        }
                    }
                    Ok(Segment::new(residues[0], residues.len()))
                }
                _ => cur.fail_here("expected ';' or ',' or ']' in segment"),
            }
        }
        Some(b'(') => {
            cur.bump();
            let len_pos = cur.pos;
            let length = cur.int()?;
            cur.expect(b';')?;
            let tail = cur.int()?;
            cur.expect(b']')?;
            if length < 1 {
                return Err(Error::parse(len_pos, "segment length must be at least 1"));
            }
            Ok(Segment::from_tail(ctx, ctx.residue(tail), length as usize))
        }
        _ => cur.fail_here("expected a segment ('[' or '(')"),
    }
}

fn parse_term(cur: &mut Cursor, ctx: &CrystalContext) -> Result<(Segment, usize), Error> {
    match cur.peek() {
        Some(b) if b.is_ascii_digit() => {
            let mult_pos = cur.pos;
            let mult = cur.int()?;
            if mult < 1 {
                return Err(Error::parse(mult_pos, "multiplicity must be at least 1"));
            }
            if cur.peek() == Some(b'*') {
                cur.bump();
            }
            let seg = parse_segment(cur, ctx)?;
            Ok((seg, mult as usize))
        }
        _ => Ok((parse_segment(cur, ctx)?, 1)),
    }
}

/// Parse a multisegment. `""` and `"∅"` denote the empty multisegment.
pub fn parse_multisegment(text: &str, ctx: &CrystalContext) -> Result<Multisegment, Error> {
    let mut cur = Cursor::new(text);
    let mut ms = Multisegment::empty();
    if cur.at_end() {
        return Ok(ms);
    }
    if cur.eat_empty_sign() {
        if cur.at_end() {
            return Ok(ms);
        }
        return cur.fail_here("unexpected input after '∅'");
    }
    loop {
        let (seg, mult) = parse_term(&mut cur, ctx)?;
        ms.insert(seg, mult);
        match cur.peek() {
            Some(b'+') => {
                cur.bump();
            }
            None => return Ok(ms),
            Some(b) => {
                return cur.fail_here(&format!(
                    "expected '+' or end of input, found '{}'",
                    b as char
                ))
            }
        }
    }
}

/// Parse a multicharge `v_0,v_1,…` and validate membership in `V_l`.
pub fn parse_multicharge(text: &str, ctx: &CrystalContext) -> Result<Multicharge, Error> {
    let mut cur = Cursor::new(text);
    let mut values = vec![cur.int()?];
    while cur.peek() == Some(b',') {
        cur.bump();
        values.push(cur.int()?);
    }
    if !cur.at_end() {
        return cur.fail_here("unexpected input after multicharge");
    }
    Multicharge::new(ctx, values)
}

/// Parse a multipartition like `6.5.2|5.3.1|4.3.3`; `-` is an empty
/// component.
pub fn parse_multipartition(text: &str) -> Result<MultiPartition, Error> {
    let mut cur = Cursor::new(text);
    let mut components: Vec<Vec<usize>> = Vec::new();
    loop {
        match cur.peek() {
            Some(b'-') => {
                cur.bump();
                components.push(vec![]);
            }
            Some(b) if b.is_ascii_digit() => {
                let mut parts = Vec::new();
                loop {
                    let part_pos = cur.pos;
                    let part = cur.int()?;
                    if part < 1 {
                        return Err(Error::parse(part_pos, "parts must be at least 1"));
                    }
                    parts.push(part as usize);
                    if cur.peek() == Some(b'.') {
                        cur.bump();
                    } else {
                        break;
                    }
                }
                if parts.windows(2).any(|w| w[0] < w[1]) {
                    return cur.fail_here("parts must be non-increasing within a component");
                }
                components.push(parts);
            }
            _ => return cur.fail_here("expected a partition component ('-' or parts)"),
        }
        match cur.peek() {
            Some(b'|') => {
                cur.bump();
            }
            None => break,
            Some(b) => {
                return cur.fail_here(&format!(
                    "expected '|' or end of input, found '{}'",
                    b as char
                ))
            }
        }
    }
    MultiPartition::new(components)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx4() -> CrystalContext {
        CrystalContext::new(4).unwrap()
    }

    #[test]
    fn worked_example_string() {
        let ctx = ctx4();
        let ms =
            parse_multisegment("[0;6)+[0;5)+[3;5)+[1;4)+2*[3;3)+[0;3)+[2;2)+[2;1)", &ctx).unwrap();
        assert_eq!(ms.rank(), 32);
        assert!(ms.is_aperiodic(&ctx));
        // The bare-coefficient multiplicity without '*' parses identically.
        let ms2 =
            parse_multisegment("[0;6)+[0;5)+[3;5)+[1;4)+2[3;3)+[0;3)+[2;2)+[2;1)", &ctx).unwrap();
        assert_eq!(ms, ms2);
        // Round trip through the canonical display.
        assert_eq!(parse_multisegment(&ms.to_string(), &ctx).unwrap(), ms);
    }

    #[test]
    fn empty_forms() {
        let ctx = ctx4();
        assert!(parse_multisegment("", &ctx).unwrap().is_empty());
        assert!(parse_multisegment("  ", &ctx).unwrap().is_empty());
        assert!(parse_multisegment("∅", &ctx).unwrap().is_empty());
    }

    #[test]
    fn residue_list_form() {
        let ctx = ctx4();
        let ms = parse_multisegment("[0,1]+[3]+[1]", &ctx).unwrap();
        let expected = Multisegment::from_segments([
            Segment::new(ctx.residue(0), 2),
            Segment::new(ctx.residue(3), 1),
            Segment::new(ctx.residue(1), 1),
        ]);
        assert_eq!(ms, expected);
        assert_eq!(ms.rank(), 4);
        // Wrap-around runs are consecutive mod e.
        let wrap = parse_multisegment("[3,0,1]", &ctx).unwrap();
        assert_eq!(
            wrap,
            Multisegment::from_segments([Segment::new(ctx.residue(3), 3)])
        );
        assert!(parse_multisegment("[0,2]", &ctx).is_err());
    }

    #[test]
    fn tail_form_and_duality() {
        let ctx = ctx4();
        // (l;t] formats in head form as [(t−l+1) mod e; l).
        let ms = parse_multisegment("(2;0]", &ctx).unwrap();
        assert_eq!(ms.to_string(), "[3;2)");
        let back = parse_multisegment(&ms.to_string(), &ctx).unwrap();
        assert_eq!(back, ms);
    }

    #[test]
    fn residues_reduce_lengths_do_not() {
        let ctx = ctx4();
        let ms = parse_multisegment("[7;2)+[-1;1)", &ctx).unwrap();
        let expected = Multisegment::from_segments([
            Segment::new(ctx.residue(3), 2),
            Segment::new(ctx.residue(3), 1),
        ]);
        assert_eq!(ms, expected);
        let err = parse_multisegment("[0;0)", &ctx).unwrap_err();
        assert!(matches!(err, Error::Parse { pos: 3, .. }), "{err:?}");
        assert!(parse_multisegment("[0;-2)", &ctx).is_err());
    }

    #[test]
    fn error_positions() {
        let ctx = ctx4();
        let err = parse_multisegment("[0;2) + [1;", &ctx).unwrap_err();
        assert!(matches!(err, Error::Parse { pos: 11, .. }), "{err:?}");
        let err = parse_multisegment("[0;2) [1;1)", &ctx).unwrap_err();
        assert!(matches!(err, Error::Parse { pos: 6, .. }), "{err:?}");
    }

    #[test]
    fn multicharge_text() {
        let ctx = ctx4();
        let v = parse_multicharge("0,0,1", &ctx).unwrap();
        assert_eq!(v.values(), &[0, 0, 1]);
        assert!(parse_multicharge("1,0", &ctx).is_err());
        assert!(parse_multicharge("", &ctx).is_err());
    }

    #[test]
    fn multipartition_text() {
        let mp = parse_multipartition("6.5.2|5.3.1|4.3.3").unwrap();
        assert_eq!(mp.level(), 3);
        assert_eq!(mp.rank(), 32);
        assert_eq!(mp.to_string(), "6.5.2|5.3.1|4.3.3");
        let empty2 = parse_multipartition("-|-").unwrap();
        assert!(empty2.is_empty());
        assert_eq!(empty2.level(), 2);
        assert_eq!(empty2.to_string(), "-|-");
        assert!(parse_multipartition("2.3").is_err());
        assert!(parse_multipartition("").is_err());
        assert!(parse_multipartition("1.0").is_err());
    }
}
