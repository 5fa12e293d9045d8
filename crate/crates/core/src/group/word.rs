use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{GroupContext, GroupError, MoebiusMat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    T,
    V,
    S,
    W,
}

impl Letter {
    fn matrix(self, ctx: &GroupContext) -> MoebiusMat {
        match self {
            Letter::T => ctx.t().clone(),
            Letter::V => ctx.v().clone(),
            Letter::S => ctx.s(),
            Letter::W => ctx.w(),
        }
    }

    fn symbol(self) -> char {
        match self {
            Letter::T => 'T',
            Letter::V => 'V',
            Letter::S => 'S',
            Letter::W => 'W',
        }
    }
}

/// A word in `T, V, S, W` with integer exponents, e.g. `V^-1 T^2 V^-1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<(Letter, i32)>);

impl Word {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[(Letter, i32)] {
        &self.0
    }

    pub fn eval(&self, ctx: &GroupContext) -> MoebiusMat {
        self.0
            .iter()
            .fold(MoebiusMat::identity(), |acc, &(l, e)| &acc * &l.matrix(ctx).pow(e))
    }
}

impl FromStr for Word {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GroupError::ParseWord(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() || compact == "I" {
            return Ok(Self::identity());
        }
        let mut out = Vec::new();
        let mut chars = compact.chars().peekable();
        while let Some(c) = chars.next() {
            let letter = match c {
                'T' => Letter::T,
                'V' => Letter::V,
                'S' => Letter::S,
                'W' => Letter::W,
                _ => return Err(bad()),
            };
            let mut exp = 1i32;
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut digits = String::new();
                if chars.peek() == Some(&'-') {
                    digits.push('-');
                    chars.next();
                }
                while let Some(d) = chars.peek().copied().filter(char::is_ascii_digit) {
                    digits.push(d);
                    chars.next();
                }
                exp = digits.parse().map_err(|_| bad())?;
            }
            out.push((letter, exp));
        }
        Ok(Self(out))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("I");
        }
        for (i, (l, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *e == 1 {
                write!(f, "{}", l.symbol())?;
            } else {
                write!(f, "{}^{}", l.symbol(), e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Order;
    use alloc::format;

    #[test]
    fn parse_and_render() {
        let w: Word = "V^-1 T^2 V^-1".parse().unwrap();
        assert_eq!(w.letters(), &[(Letter::V, -1), (Letter::T, 2), (Letter::V, -1)]);
        assert_eq!(format!("{w}"), "V^-1 T^2 V^-1");
        assert_eq!("VTV^-1".parse::<Word>().unwrap().letters().len(), 3);
        assert_eq!("".parse::<Word>().unwrap(), Word::identity());
        assert!("X".parse::<Word>().is_err());
        assert!("T^".parse::<Word>().is_err());
    }

    #[test]
    fn evaluates_side_pairing_words() {
        let ctx = GroupContext::new(Order::Infinity, 3).unwrap();
        let a2: Word = "V^-1 T^2 V^-1".parse().unwrap();
        assert!(a2.eval(&ctx).proj_eq(&MoebiusMat::from_ints(5, -8, 12, -19).unwrap()));
        assert!(Word::identity().eval(&ctx).is_identity());
    }
}
