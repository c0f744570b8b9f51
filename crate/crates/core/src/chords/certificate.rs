use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// A cycle together with some of its chords, optionally all meeting at one
/// apex vertex on the cycle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate {
    /// Vertex sequence; the closing edge back to `cycle[0]` is implicit.
    pub cycle: Vec<usize>,
    pub chords: Vec<(usize, usize)>,
    pub apex: Option<usize>,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cycle=")?;
        for (i, v) in self.cycle.iter().enumerate() {
            write!(f, "{}{v}", if i == 0 { "" } else { "," })?;
        }
        write!(f, ";chords=")?;
        for (i, (a, b)) in self.chords.iter().enumerate() {
            write!(f, "{}{a}-{b}", if i == 0 { "" } else { "," })?;
        }
        if let Some(a) = self.apex {
            write!(f, ";apex={a}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed certificate: {0}")]
pub struct CertificateParseError(pub String);

fn bad(msg: &str) -> CertificateParseError {
    CertificateParseError(msg.to_string())
}

fn vertex(text: &str) -> Result<usize, CertificateParseError> {
    text.trim()
        .parse()
        .map_err(|_| CertificateParseError(alloc::format!("bad vertex `{text}`")))
}

impl FromStr for Certificate {
    type Err = CertificateParseError;

    fn from_str(text: &str) -> Result<Certificate, CertificateParseError> {
        let mut cycle = None;
        let mut chords = None;
        let mut apex = None;
        for field in text.trim().split(';') {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| bad("field without `=`"))?;
            let value = value.trim();
            match key.trim() {
                "cycle" if cycle.is_none() => {
                    cycle = Some(
                        value
                            .split(',')
                            .map(vertex)
                            .collect::<Result<Vec<_>, _>>()?,
                    );
                }
                "chords" if chords.is_none() => {
                    chords = Some(if value.is_empty() {
                        Vec::new()
                    } else {
                        value
                            .split(',')
                            .map(|c| {
                                let (a, b) =
                                    c.split_once('-').ok_or_else(|| bad("chord without `-`"))?;
                                Ok((vertex(a)?, vertex(b)?))
                            })
                            .collect::<Result<Vec<_>, _>>()?
                    });
                }
                "apex" if apex.is_none() => apex = Some(vertex(value)?),
                other => {
                    return Err(CertificateParseError(alloc::format!(
                        "unexpected field `{other}`"
                    )))
                }
            }
        }
        Ok(Certificate {
            cycle: cycle.ok_or_else(|| bad("missing cycle"))?,
            chords: chords.ok_or_else(|| bad("missing chords"))?,
            apex,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form() {
        let c = Certificate {
            cycle: alloc::vec![0, 1, 2, 3, 4, 5],
            chords: alloc::vec![(0, 2), (0, 3), (0, 4)],
            apex: Some(0),
        };
        let text = "cycle=0,1,2,3,4,5;chords=0-2,0-3,0-4;apex=0";
        assert_eq!(c.to_string(), text);
        assert_eq!(text.parse::<Certificate>().unwrap(), c);

        let bare = Certificate {
            cycle: alloc::vec![0, 1, 2],
            chords: Vec::new(),
            apex: None,
        };
        assert_eq!(bare.to_string(), "cycle=0,1,2;chords=");
        assert_eq!("cycle=0,1,2;chords=".parse::<Certificate>().unwrap(), bare);
    }

    #[test]
    fn malformed() {
        for text in [
            "",
            "cycle=0,1,2",
            "chords=0-2",
            "cycle=0,x;chords=",
            "cycle=0;chords=1",
            "cycle=0;chords=;foo=1",
            "cycle=0;cycle=1;chords=",
        ] {
            assert!(text.parse::<Certificate>().is_err(), "{text}");
        }
    }
}
