//! Group specification grammar.

use annigraph_core::arith;
use annigraph_core::{Error, FiniteAbelianGroup, Result};

pub const GROUP_SPEC_GRAMMAR: &str = "group spec grammar:
  moduli:N1,N2,...      direct sum of Z/NiZ, each Ni >= 2
  p^a:P^A               cyclic p-group Z/P^A Z, P prime
  plist:P^A1,P^A2,...   Z/P^A1 Z + Z/P^A2 Z + ..., one prime P, exponents ascending";

struct Cursor<'s> {
    s: &'s str,
    pos: usize,
}

impl<'s> Cursor<'s> {
    fn err<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos, msg: msg.into() })
    }

    fn peek(&self) -> Option<char> {
        self.s[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(self.pos, format!("expected '{c}'"))
        }
    }

    fn int(&mut self) -> Result<(u64, usize)> {
        let start = self.pos;
        let len = self.s[start..].bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return self.err(start, "expected an integer");
        }
        self.pos += len;
        match self.s[start..self.pos].parse() {
            Ok(v) => Ok((v, start)),
            Err(_) => self.err(start, "integer out of range"),
        }
    }

    /// `P^A` with `P` prime and `A >= 1`.
    fn prime_power(&mut self) -> Result<(u64, u32, usize)> {
        let (p, at) = self.int()?;
        self.expect('^')?;
        let (a, a_at) = self.int()?;
        if !arith::is_prime(p) {
            return Err(Error::NonPrimeBase(p));
        }
        let a = match u32::try_from(a) {
            Ok(a) if a >= 1 => a,
            _ => return self.err(a_at, "exponent must be a positive integer"),
        };
        if p.checked_pow(a).is_none() {
            return self.err(at, "prime power overflows u64");
        }
        Ok((p, a, at))
    }

    fn end(&self) -> Result<()> {
        if self.pos == self.s.len() {
            Ok(())
        } else {
            self.err(self.pos, "unexpected trailing input")
        }
    }
}

/// Parses `moduli:…`, `p^a:…` or `plist:…`; positions are byte offsets.
pub fn parse_group_spec(s: &str) -> Result<FiniteAbelianGroup> {
    let Some((kind, _)) = s.split_once(':') else {
        return Err(Error::Parse {
            pos: 0,
            msg: "expected 'moduli:', 'p^a:' or 'plist:'".into(),
        });
    };
    let mut c = Cursor {
        s,
        pos: kind.len() + 1,
    };
    match kind {
        "moduli" => {
            let mut moduli = Vec::new();
            loop {
                let (n, at) = c.int()?;
                if n < 2 {
                    return c.err(at, "modulus must be at least 2");
                }
                moduli.push(n);
                if !c.eat(',') {
                    break;
                }
            }
            c.end()?;
            FiniteAbelianGroup::new(&moduli)
        }
        "p^a" => {
            let (p, a, _) = c.prime_power()?;
            c.end()?;
            FiniteAbelianGroup::cyclic_p(p, a)
        }
        "plist" => {
            let (p, a, _) = c.prime_power()?;
            let mut exps = vec![a];
            while c.eat(',') {
                let (q, b, at) = c.prime_power()?;
                if q != p {
                    return c.err(at, format!("all factors must use the prime {p}"));
                }
                if b < *exps.last().expect("nonempty") {
                    return c.err(at, "exponents must be ascending");
                }
                exps.push(b);
            }
            c.end()?;
            FiniteAbelianGroup::p_group(p, &exps)
        }
        _ => Err(Error::Parse {
            pos: 0,
            msg: format!("unknown group form '{kind}'"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pos(s: &str) -> usize {
        match parse_group_spec(s) {
            Err(Error::Parse { pos, .. }) => pos,
            other => panic!("{s}: {other:?}"),
        }
    }

    #[test]
    fn examples() {
        let g = parse_group_spec("p^a:2^3").unwrap();
        assert_eq!(g.moduli(), &[8]);
        let g = parse_group_spec("plist:2^1,2^2,2^3").unwrap();
        assert_eq!(g.moduli(), &[2, 4, 8]);
        let g = parse_group_spec("moduli:6,10").unwrap();
        assert_eq!(g.exponent(), 30);
        assert!(g.p_group_view().is_none());
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(pos("cyclic:8"), 0);
        assert_eq!(pos("8"), 0);
        assert_eq!(pos("moduli:"), 7);
        assert_eq!(pos("moduli:6,,10"), 9);
        assert_eq!(pos("moduli:6,1"), 9);
        assert_eq!(pos("moduli:6x"), 8);
        assert_eq!(pos("p^a:2"), 5);
        assert_eq!(pos("p^a:2^0"), 6);
        assert_eq!(pos("p^a:2^3,"), 7);
        assert_eq!(pos("plist:2^2,2^1"), 10);
        assert_eq!(pos("plist:2^1,3^2"), 10);
        assert_eq!(pos("p^a:2^99"), 4);
    }

    #[test]
    fn non_prime_bases() {
        assert_eq!(parse_group_spec("p^a:6^2").unwrap_err(), Error::NonPrimeBase(6));
        assert_eq!(parse_group_spec("plist:2^1,4^2").unwrap_err(), Error::NonPrimeBase(4));
        assert!(parse_group_spec("moduli:4,6").is_ok());
    }
}
