//! Closed-form characteristic polynomials of the near-extremal families,
//! their quotient matrices, and the printed derivative tables used to bound
//! their largest roots.
//!
//! Polynomials are stored as text exactly in the printed layout and parsed
//! with `n` and `s` substituted, so a transcription can be compared against
//! the source line by line.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{IntMatrix, IntPolynomial};
use crate::graph::{u12, u_graph, Family, FamilyError, Graph, JoinPattern, VertexSet};

/// One polynomial of the catalogue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AppendixId {
    /// The cubic of the extremal graph `K^+_{1,1,n-2}`.
    G,
    /// `g_1` to `g_18`.
    Item(u8),
    /// `g_12(x, s) - g_12(x, s + 4)`.
    H1,
    /// `g_18(x, s) - g_18(x, s + 4)`.
    H2,
    /// `g_7(x) / (x - 6)`.
    F,
}

impl AppendixId {
    pub fn all() -> Vec<AppendixId> {
        let mut v = alloc::vec![AppendixId::G];
        v.extend((1..=18).map(AppendixId::Item));
        v.extend([AppendixId::H1, AppendixId::H2, AppendixId::F]);
        v
    }

    pub fn needs_s(self) -> bool {
        matches!(
            self,
            AppendixId::Item(12) | AppendixId::Item(18) | AppendixId::H1 | AppendixId::H2
        )
    }

    /// Ids that come with a quotient matrix and a graph.
    pub fn has_matrix(self) -> bool {
        matches!(self, AppendixId::G | AppendixId::Item(_))
    }
}

impl fmt::Display for AppendixId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppendixId::G => write!(f, "g"),
            AppendixId::Item(i) => write!(f, "g{i}"),
            AppendixId::H1 => write!(f, "h1"),
            AppendixId::H2 => write!(f, "h2"),
            AppendixId::F => write!(f, "f"),
        }
    }
}

impl FromStr for AppendixId {
    type Err = AppendixError;
    fn from_str(text: &str) -> Result<AppendixId, AppendixError> {
        match text {
            "g" => Ok(AppendixId::G),
            "h1" => Ok(AppendixId::H1),
            "h2" => Ok(AppendixId::H2),
            "f" => Ok(AppendixId::F),
            _ => text
                .strip_prefix('g')
                .and_then(|i| i.parse::<u8>().ok())
                .filter(|i| (1..=18).contains(i))
                .map(AppendixId::Item)
                .ok_or_else(|| AppendixError::UnknownId(text.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AppendixError {
    #[error("unknown polynomial id `{0}`")]
    UnknownId(String),
    #[error("{id} is undefined at n = {n}, s = {s:?}: {reason}")]
    OutOfRange {
        id: AppendixId,
        n: usize,
        s: Option<usize>,
        reason: &'static str,
    },
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// Which `U` graph each numbered item is built from; the two numberings
/// differ.
const ITEM_TO_FIGURE: [u8; 11] = [1, 5, 2, 4, 3, 6, 7, 8, 9, 10, 11];

/// The `U` index behind `g_i` for `i` in `1..=11`.
pub fn figure_index(item: u8) -> Option<u8> {
    ITEM_TO_FIGURE
        .get(usize::from(item).checked_sub(1)?)
        .copied()
}

/// Checks `(n, s)` against the construction behind `id`.
pub fn check_params(id: AppendixId, n: usize, s: Option<usize>) -> Result<(), AppendixError> {
    let fail = |reason| Err(AppendixError::OutOfRange { id, n, s, reason });
    let s_val = match (id.needs_s(), s) {
        (true, None) => return fail("requires s"),
        (false, Some(_)) => return fail("takes no s"),
        (true, Some(s)) => s,
        (false, None) => 0,
    };
    let congruent = |base: usize| n >= base && (n - base) % 4 == 0;
    let ok = match id {
        AppendixId::G => n >= 6,
        AppendixId::Item(i @ 1..=11) => {
            let order = u_graph(figure_index(i).unwrap()).unwrap().order;
            n >= 7 && congruent(order)
        }
        AppendixId::F => congruent(8),
        AppendixId::Item(12) => s_val >= 3 && n >= 7 && congruent(s_val + 3),
        AppendixId::H1 => s_val >= 3 && congruent(s_val + 7),
        AppendixId::Item(13) => n >= 7,
        AppendixId::Item(14) => n >= 7 && congruent(1),
        AppendixId::Item(15) => n >= 7 && congruent(2),
        AppendixId::Item(16) => n >= 7 && congruent(3),
        AppendixId::Item(17) => n >= 8 && congruent(4),
        AppendixId::Item(18) => s_val >= 3 && n >= 7 && congruent(s_val + 2),
        AppendixId::H2 => s_val >= 3 && congruent(s_val + 6),
        AppendixId::Item(_) => return Err(AppendixError::UnknownId(id.to_string())),
    };
    if ok {
        Ok(())
    } else {
        fail("outside the construction's range")
    }
}

/// Every valid `(n, s)` with `n` in `lo..=hi`, ascending.
pub fn valid_params(id: AppendixId, lo: usize, hi: usize) -> Vec<(usize, Option<usize>)> {
    let mut out = Vec::new();
    for n in lo..=hi {
        if id.needs_s() {
            for s in 0..=n {
                if check_params(id, n, Some(s)).is_ok() {
                    out.push((n, Some(s)));
                }
            }
        } else if check_params(id, n, None).is_ok() {
            out.push((n, None));
        }
    }
    out
}

/// The printed polynomial text behind `id`.
pub fn polynomial_text(id: AppendixId) -> &'static str {
    match id {
        AppendixId::G => "x^3-(n+6)x^2+(4n+12)x-24",
        AppendixId::Item(1) => "x^4 - ( n + 15)x^3 + (16n + 58)x^2 -(80n-24 )x + 120n - 272",
        AppendixId::Item(2) => "x^5-(n+20)x^4+(21n+133)x^3-(160n+260)x^2+(520n-452)x-600n+1480",
        AppendixId::Item(3) => {
            "x^5 - ( n  +16)x^4 + (17n + 75)x^3 - ( 98n +48)x^2 + (214n - 288)x - 132n + 288"
        }
        // Printed as (x - 1) g_3(x).
        AppendixId::Item(4) => {
            "(x-1)(x^5 - ( n  +16)x^4 + (17n + 75)x^3 - ( 98n +48)x^2 + (214n - 288)x - 132n + 288)"
        }
        AppendixId::Item(5) => {
            "x^5 -(n +16)x^4 + (17n + 73)x^3 - (96n +28)x^2 + (200n - 356)x - 120n + 392"
        }
        AppendixId::Item(6) => {
            "x^6 -( n + 21)x^5 + (22n + 155)x^4 - ( 183n + 417)x^3 + (704n - 114)x^2
             + (1920 - 1202n)x + 660n - 1572"
        }
        AppendixId::Item(7) => {
            "(x-6)(x^4 - ( n + 13)x^3 + (14n + 40)x^2 + (42 - 60n)x + 75n - 180)"
        }
        AppendixId::F => "x^4 - ( n + 13)x^3 + (14n + 40)x^2 + (42 - 60n)x + 75n - 180",
        AppendixId::Item(8) => {
            "x^5 -( n + 17)x^4 + (18n + 88)x^3 - ( 112n + 84)x^2 + (276n - 384)x - 216n + 624"
        }
        AppendixId::Item(9) => {
            "x^6-( n + 20)x^5 + (21n + 140)x^4 - ( 167n + 358)x^3 + (620n -91)x^2
             + (1612 - 1051n)x + 618n - 1524"
        }
        AppendixId::Item(10) => {
            "x^7 -( n + 23)x^6 + (24n + 197)x^5 -( 227n + 731)x^4 + (1073n + 739)x^3
             + (2307 - 2643n)x^2 + (3174n - 6322)x - 1440n + 4256"
        }
        AppendixId::Item(11) => {
            "x^7 - ( n + 24)x^6 + (25n + 214)x^5 - ( 245n + 824)x^4 + (1192n + 841)x^3
             + (2952 - 2995n)x^2 + (3628n - 8328)x - 1644n + 5872"
        }
        AppendixId::Item(12) => {
            "x^5 - ( n +2s + 9)x^4 + (s^2 + (2n + 15)s + 10n + 11)x^3 - (( n + 6)s^2+ (17n+2)s
             +27n- 39)x^2+ ((7n - 14)s^2 + (32n - 44)s +18n -54)x+ 6s^3
             - (6n-2)s^2- ( 12n-36)s"
        }
        AppendixId::Item(13) => {
            "x^4 - (3n-4)x^3 + (3n^2 - 8n + 3)x^2 -( n^3 - 4n^2 + 7n - 12)x + 4n^2 - 24n + 36"
        }
        AppendixId::Item(14) => "x^2-( n + 6)x + 6n - 6",
        AppendixId::Item(15) => "x^3 -( n + 7)x^2 + 7nx - 6n + 12",
        AppendixId::Item(16) => "x^3 - ( n + 9)x^2 + (9n + 12)x - 18n + 26",
        AppendixId::Item(17) => "x^3 - ( n + 11)x^2 + (11n + 24)x - 30n + 36",
        AppendixId::Item(18) => {
            "x^5 - (n +s + 13)x^4 + (13n + 11s + ns + 50)x^3 - (56n + 26s + 11ns + 52)x^2
             - ( 6s^2 - 34ns - 96n + 24)x + 24s^2 - 48s - 24ns - 72n + 144"
        }
        AppendixId::H1 => {
            "8x^4 - ( 8s + 8n + 76)x^3 + ((8n + 48)s + 84n + 104)x^2-((56n-112)s + 240n- 400)x
             - 72s^2 + (48n - 304)s + 144n - 560"
        }
        AppendixId::H2 => "4x^4 -(4n+ 44)x^3 + (44n + 104)x^2 - (136n+48s + 96)x + 96n- 192s - 192",
        AppendixId::Item(_) => "",
    }
}

fn to_i64(v: usize) -> i64 {
    i64::try_from(v).expect("parameter fits in i64")
}

/// The printed closed form of `id` with `n` (and `s`) substituted.
pub fn appendix_polynomial(
    id: AppendixId,
    n: usize,
    s: Option<usize>,
) -> Result<IntPolynomial, AppendixError> {
    check_params(id, n, s)?;
    Ok(parse_in(polynomial_text(id), n, s))
}

/// Parses catalogue text; the texts are fixed, so failures are bugs.
pub fn parse_in(text: &str, n: usize, s: Option<usize>) -> IntPolynomial {
    IntPolynomial::parse_with(text, Some(to_i64(n)), s.map(to_i64))
        .unwrap_or_else(|e| panic!("catalogue text `{text}`: {e}"))
}

/// The quotient matrix as printed, with every block present even when its
/// size is zero.
pub fn formal_quotient(
    id: AppendixId,
    n: usize,
    s: Option<usize>,
) -> Result<IntMatrix, AppendixError> {
    check_params(id, n, s)?;
    let n = to_i64(n);
    let s = s.map(to_i64).unwrap_or(0);
    let rows: Vec<Vec<i64>> = match id {
        AppendixId::G => alloc::vec![
            alloc::vec![n, 2, n - 4],
            alloc::vec![2, 4, 0],
            alloc::vec![2, 0, 2],
        ],
        AppendixId::Item(i) => item_rows(i, n, s),
        _ => {
            return Err(AppendixError::OutOfRange {
                id,
                n: n as usize,
                s: None,
                reason: "has no quotient matrix",
            })
        }
    };
    Ok(IntMatrix::from_rows(&rows))
}

fn item_rows(i: u8, n: i64, s: i64) -> Vec<Vec<i64>> {
    macro_rules! m {
        ($([$($e:expr),*]),*) => { alloc::vec![$(alloc::vec![$($e),*]),*] };
    }
    match i {
        1 => m![
            [n - 2, 4, n - 6, 0],
            [1, 6, 0, 1],
            [1, 0, 7, 0],
            [0, 4, 0, 4]
        ],
        2 => m![
            [n - 2, 3, 4, n - 9, 0],
            [1, 5, 0, 0, 0],
            [1, 0, 6, 0, 1],
            [1, 0, 0, 7, 0],
            [0, 0, 4, 0, 4]
        ],
        3 => m![
            [n - 2, 2, 2, n - 6, 0],
            [1, 5, 2, 0, 0],
            [1, 2, 4, 0, 1],
            [1, 0, 0, 7, 0],
            [0, 0, 2, 0, 2]
        ],
        4 => m![
            [n - 2, 1, 2, 2, n - 7, 0],
            [1, 1, 0, 0, 0, 0],
            [1, 0, 5, 2, 0, 0],
            [1, 0, 2, 4, 0, 1],
            [1, 0, 0, 0, 7, 0],
            [0, 0, 0, 2, 0, 2]
        ],
        5 => m![
            [n - 2, 1, 4, n - 7, 0],
            [1, 1, 0, 0, 0],
            [1, 0, 6, 0, 1],
            [1, 0, 0, 7, 0],
            [0, 0, 4, 0, 4]
        ],
        6 => m![
            [n - 2, 3, 2, 2, n - 9, 0],
            [1, 5, 0, 0, 0, 0],
            [1, 0, 4, 2, 0, 1],
            [1, 0, 2, 5, 0, 0],
            [1, 0, 0, 0, 7, 0],
            [0, 0, 2, 0, 0, 2]
        ],
        7 => m![
            [n - 2, 3, 3, n - 8, 0],
            [1, 6, 0, 0, 1],
            [1, 0, 5, 0, 0],
            [1, 0, 0, 7, 0],
            [0, 3, 0, 0, 3]
        ],
        8 => m![
            [n - 2, 1, 3, n - 6, 0],
            [1, 2, 0, 0, 1],
            [1, 0, 6, 0, 1],
            [1, 0, 0, 7, 0],
            [0, 1, 3, 0, 4]
        ],
        9 => m![
            [n - 2, 2, 1, 1, n - 6, 0],
            [1, 5, 1, 0, 0, 1],
            [1, 2, 4, 1, 0, 0],
            [1, 0, 1, 3, 0, 1],
            [1, 0, 0, 0, 7, 0],
            [0, 2, 0, 1, 0, 3]
        ],
        10 => m![
            [n - 2, 2, 1, 1, 1, n - 7, 0],
            [1, 5, 1, 0, 0, 0, 1],
            [1, 2, 5, 1, 1, 0, 0],
            [1, 0, 1, 2, 0, 0, 0],
            [1, 0, 1, 0, 3, 0, 1],
            [1, 0, 0, 0, 0, 7, 0],
            [0, 2, 0, 0, 1, 0, 3]
        ],
        11 => m![
            [n - 2, 2, 1, 2, 1, n - 8, 0],
            [1, 5, 1, 0, 0, 0, 1],
            [1, 2, 6, 2, 1, 0, 0],
            [1, 0, 1, 2, 0, 0, 0],
            [1, 0, 1, 0, 3, 0, 1],
            [1, 0, 0, 0, 0, 7, 0],
            [0, 2, 0, 0, 1, 0, 3]
        ],
        12 => m![
            [n - 2, s, 1, n - s - 3, 0],
            [1, 3, 1, 0, 1],
            [1, s, s + 1, 0, 0],
            [1, 0, 0, 7, 0],
            [0, s, 0, 0, s]
        ],
        13 => m![
            [n - 2, n - 3, 1, 0],
            [1, 3, 1, 1],
            [1, n - 3, n - 2, 0],
            [0, n - 3, 0, n - 3]
        ],
        14 => m![[n - 1, n - 1], [1, 7]],
        15 => m![[n - 1, 1, n - 2], [1, 1, 0], [1, 0, 7]],
        16 => m![[n - 1, 2, n - 3], [1, 3, 0], [1, 0, 7]],
        17 => m![[n - 1, 3, n - 4], [1, 5, 0], [1, 0, 7]],
        18 => m![
            [n - 1, 1, 2, s - 2, n - s - 2],
            [1, s + 1, 2, s - 2, 0],
            [1, 1, 4, 0, 0],
            [1, 1, 0, 2, 0],
            [1, 0, 0, 0, 7]
        ],
        _ => unreachable!("item index checked by check_params"),
    }
}

/// The graph behind a matrix id, as a family name.
pub fn item_family(id: AppendixId, n: usize, s: Option<usize>) -> Result<Family, AppendixError> {
    check_params(id, n, s)?;
    let s = s.unwrap_or(0);
    Ok(match id {
        AppendixId::G => Family::K11n2Plus { n },
        AppendixId::Item(i @ 1..=11) => Family::G {
            i: figure_index(i).unwrap(),
            n,
        },
        AppendixId::Item(12) => Family::G12 { n, s },
        AppendixId::Item(13) => Family::G13 { n },
        AppendixId::Item(14) => Family::JoinK1(JoinPattern::K4Blocks { n }),
        AppendixId::Item(15) => Family::JoinK1(JoinPattern::IsolatedAndK4Blocks { n }),
        AppendixId::Item(16) => Family::JoinK1(JoinPattern::EdgeAndK4Blocks { n }),
        AppendixId::Item(17) => Family::JoinK1(JoinPattern::StarPlusAndK4Blocks { n, s: 2 }),
        AppendixId::Item(18) => Family::JoinK1(JoinPattern::StarPlusAndK4Blocks { n, s }),
        _ => {
            return Err(AppendixError::OutOfRange {
                id,
                n,
                s: None,
                reason: "has no graph",
            })
        }
    })
}

fn range(lo: usize, hi: usize) -> VertexSet {
    (lo..hi).collect()
}

/// The graph behind `id` with its vertex blocks in the row order of
/// [`formal_quotient`]. Blocks of zero size are kept as empty sets.
pub fn item_partition(
    id: AppendixId,
    n: usize,
    s: Option<usize>,
) -> Result<(Graph, Vec<VertexSet>), AppendixError> {
    let graph = item_family(id, n, s)?.graph()?;
    let s = s.unwrap_or(0);
    let with_k4 = |blocks: &[Vec<usize>], at: usize, order: usize| {
        let mut out: Vec<VertexSet> = blocks.iter().map(|b| b.iter().collect()).collect();
        out.insert(at, range(order, n));
        out
    };
    let blocks = match id {
        AppendixId::G => alloc::vec![range(0, 2), range(2, 4), range(4, n)],
        AppendixId::Item(i @ 1..=11) => {
            let u = u_graph(figure_index(i).unwrap()).unwrap();
            with_k4(&u.blocks, u.k4_block_at, u.order)
        }
        AppendixId::Item(12) => {
            let u = u12(s);
            with_k4(&u.blocks, u.k4_block_at, u.order)
        }
        AppendixId::Item(13) => alloc::vec![range(0, 1), range(3, n), range(2, 3), range(1, 2)],
        AppendixId::Item(14) => alloc::vec![range(0, 1), range(1, n)],
        AppendixId::Item(15) => alloc::vec![range(0, 1), range(1, 2), range(2, n)],
        AppendixId::Item(16) => alloc::vec![range(0, 1), range(1, 3), range(3, n)],
        AppendixId::Item(17) => alloc::vec![range(0, 1), range(1, 4), range(4, n)],
        AppendixId::Item(18) => alloc::vec![
            range(0, 1),
            range(1, 2),
            range(2, 4),
            range(4, s + 2),
            range(s + 2, n)
        ],
        _ => unreachable!("item_family rejects ids without graphs"),
    };
    Ok((graph, blocks))
}

/// One line of a printed derivative table: the `order`-th derivative, its
/// printed form, its printed value at `x = n + 1` (a polynomial in `n` and
/// `s`), and a printed lower bound for that value where one is given.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainStep {
    pub order: usize,
    pub derivative: Option<&'static str>,
    pub at_n_plus_1: Option<&'static str>,
    pub lower_bound: Option<&'static str>,
}

/// A printed argument that the polynomial is positive from `x = n + 1` on,
/// claimed for every valid `n >= min_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerivativeChain {
    pub id: AppendixId,
    pub min_n: usize,
    pub steps: &'static [ChainStep],
}

const fn step(
    order: usize,
    derivative: Option<&'static str>,
    at_n_plus_1: Option<&'static str>,
) -> ChainStep {
    ChainStep {
        order,
        derivative,
        at_n_plus_1,
        lower_bound: None,
    }
}

const fn bounded(
    order: usize,
    derivative: &'static str,
    at_n_plus_1: &'static str,
    lower_bound: &'static str,
) -> ChainStep {
    ChainStep {
        order,
        derivative: Some(derivative),
        at_n_plus_1: Some(at_n_plus_1),
        lower_bound: Some(lower_bound),
    }
}

static CHAINS: &[DerivativeChain] = &[
    DerivativeChain {
        id: AppendixId::Item(1),
        min_n: 10,
        steps: &[
            step(2, Some("12x^2 - ( 6n+ 90)x + 32n + 116"), Some("6n^2 - 40n + 38")),
            step(1, Some("4x^3-(3n + 45)x^2 + (32n + 116)x - 80n + 24"), Some("n^3 - 7n^2 - 13n + 99")),
            step(0, None, Some("2n^3 - 32n^2 + 154n - 204")),
        ],
    },
    DerivativeChain {
        id: AppendixId::Item(2),
        min_n: 9,
        steps: &[
            step(3, Some("60x^2 - ( 24n + 480)x + 126n + 798"), Some("36n^2 - 258n + 378")),
            step(2, Some("20x^3 - ( 12n + 240)x^2 + (126n + 798)x - 320n - 520"), Some("8n^3 - 78n^2 + 172n + 58")),
            step(
                1,
                Some("5x^4 - (4n + 80)x^3 + (63n + 399)x^2 - ( 320n + 520)x + 520n - 452"),
                Some("n^4 - 9n^3 - 17n^2 + 317n - 648"),
            ),
            step(0, None, Some("2n^4 - 40n^3 + 288n^2 - 868n + 882")),
        ],
    },
    DerivativeChain {
        id: AppendixId::Item(3),
        min_n: 7,
        steps: &[
            step(3, Some("60x^2 - (24n + 384)x + 102n + 450"), Some("36n^2 - 186n + 126")),
            step(2, Some("20x^3 - (12n + 192)x^2 + (102n + 450)x - 196n - 84"), Some("8n^3 - 54n^2 + 20n + 194")),
            step(
                1,
                Some("5x^4 - ( 4n + 64)x^3 + (51n + 225)x^2 - ( 196n + 84)x + 214n - 348"),
                Some("n^4 - 5n^3 - 43n^2 + 259n - 266"),
            ),
            step(0, None, Some("2n^4 - 32n^3 + 162n^2 - 266n + 90")),
        ],
    },
    DerivativeChain {
        id: AppendixId::Item(4),
        min_n: 7,
        steps: &[step(0, None, None)],
    },
    DerivativeChain {
        id: AppendixId::Item(5),
        min_n: 7,
        steps: &[
            step(3, Some("60*x^2 -( 24n + 384)x + 102n + 438"), Some("36n^2 - 186n + 114")),
            step(2, Some("20x^3 - ( 12n + 192)x^2 + (102n + 438)x - 192n - 56"), Some("8n^3 - 54n^2 + 12n + 210")),
            step(
                1,
                Some("5x^4 - ( 4n + 64)x^3 + (51n + 219)x^2 -( 192n + 56)x + 200n - 356"),
                Some("n^4 - 5n^3 - 45n^2 + 265n - 252"),
            ),
            step(0, None, Some("2n^4 - 32n^3 + 160n^2 - 252n + 66")),
        ],
    },
    DerivativeChain {
        id: AppendixId::Item(6),
        min_n: 9,
        steps: &[
            step(4, Some("360x^2 - ( 120n + 2520)x + 528n + 3720"), Some("240n^2 - 1392n + 1560")),
            step(
                3,
                Some("120x^3 - ( 60n + 1260)x^2 + (528n + 3720)x - 1098n - 2502"),
                Some("60n^3 - 492n^2 + 930n + 78"),
            ),
            step(
                2,
                Some("30x^4 - ( 20n + 420)x^3 + (264n + 1860)x^2 - ( 1098n + 2502)x + 1408n - 228"),
                Some("10n^4 - 96n^3 + 150n^2 + 632n - 1260"),
            ),
            step(
                1,
                Some("6x^5 -( 5n + 105)x^4 + (88n + 620)x^3 - ( 549n + 1251)x^2 + (1408n - 228)x - 1202n + 1920"),
                Some("n^5 - 7n^4 - 55n^3 + 593n^2 - 1520n + 962"),
            ),
            step(0, None, Some("2n^5 - 40n^4 + 290n^3 - 890n^2 + 962n - 48")),
        ],
    },
    DerivativeChain {
        id: AppendixId::F,
        min_n: 8,
        steps: &[
            step(2, Some("12x^2 - ( 6n + 78)x + 28n + 80"), Some("6n^2 - 32n + 14")),
            step(1, Some("4x^3 - (3n + 39)x^2 + (28n + 80)x - 60n + 42"), Some("n^3 - 5n^2 - 21n + 87")),
            step(0, None, Some("2n^3 - 28n^2 + 115n - 110")),
        ],
    },
    DerivativeChain {
        id: AppendixId::Item(8),
        min_n: 10,
        steps: &[
            step(3, Some("60x^2 - ( 24n + 408)x + 108n + 528"), Some("36n^2 - 204n + 180")),
            step(2, Some("20x^3 - ( 12n + 204)x^2 + (108n + 528)x - 224n - 168"), Some("8n^3 - 60n^2 + 52n + 176")),
            step(
                1,
                Some("5x^4 - ( 4n + 68)x^3 + (54n + 264)x^2 - ( 224n + 168)x + 276n - 384"),
                Some("n^4 - 6n^3 - 38n^2 + 278n - 351"),
            ),
            step(0, None, Some("2n^4 - 34n^3 + 190n^2 - 386n + 228")),
        ],
    },
    DerivativeChain {
        id: AppendixId::Item(9),
        min_n: 10,
        steps: &[
            step(4, Some("360x^2 - ( 120n + 2400)x + 504n + 3360"), Some("240n^2 - 1296n + 1320")),
            step(
                3,
                Some("120x^3 - ( 60n + 1200)x^2 + (504n + 3360)x - 1002n - 2148"),
                Some("60n^3 - 456n^2 + 762n + 132"),
            ),
            step(
                2,
                Some("30x^4 - ( 20n + 400)x^3 + (252n + 1680)x^2 - ( 1002n + 2148)x + 1240n - 182"),
                Some("10n^4 - 88n^3 + 102n^2 + 602n - 1020"),
            ),
            step(
                1,
                Some("6x^5 - (5n + 100)x^4 + (84n + 560)x^3 - ( 501n +1074)x^2+ (1240n - 182)x - 1051n + 1612"),
                Some("n^5 - 6n^4 - 59n^3 + 536n^2 - 1253n + 822"),
            ),
            step(0, None, Some("2n^5 - 38n^4 + 257n^3 - 743n^2 + 862n - 240")),
        ],
    },
    DerivativeChain {
        id: AppendixId::Item(10),
        min_n: 11,
        steps: &[
            step(5, Some("2520x^2 - ( 720n +16560)x + 2880n + 23640"), Some("1800n^2 - 9360n + 9600")),
            step(
                4,
                Some("840x^3 -( 360n + 8280)x^2 + (2880n + 23640)x - 5448n - 17544"),
                Some("480n^3 - 3600n^2 + 6672n - 1344"),
            ),
            step(
                3,
                Some("210x^4 -( 120n + 2760)x^3 + (1440n + 11820)x^2 - ( 5448n + 17544)x + 6438n + 4434"),
                Some("90n^4 - 840n^3 + 1872n^2 + 966n - 3840"),
            ),
            step(
                2,
                Some("42x^5 - ( 30n + 690)x^4 + (480n + 3940)x^3 - ( 2724n +8772)x^2+ (6438n + 4434)x - 5286n + 4614"),
                Some("12n^5 - 120n^4 + 136n^3 + 1638n^2 - 4962n + 3568"),
            ),
            step(
                1,
                Some("7x^6 -( 6n + 138)x^5 + (120n + 985)x^4 -( 908n + 2924)x^3+ (3219n + 2217)x^2 + (4614 - 5286n)x + 3174n - 6322"),
                Some("n^6 - 6n^5 - 88n^4 + 931n^3 - 3042n^2 + 3881n - 1561"),
            ),
            step(0, None, Some("2n^6 - 42n^5 + 329n^4 - 1201n^3 + 2097n^2 - 1601n + 424")),
        ],
    },
    DerivativeChain {
        id: AppendixId::Item(11),
        min_n: 12,
        steps: &[
            step(5, Some("2520x^2 -( 720n + 17280)x + 3000n + 25680"), Some("1800n^2 - 9960n + 10920")),
            step(
                4,
                Some("840x^3 - ( 360n + 8640)x^2 + (3000n + 25680)x - 5880n - 19776"),
                Some("480n^3 - 3840n^2 + 7680n - 1896"),
            ),
            step(
                3,
                Some("210x^4 -( 120n + 2880)x^3 + (1500n + 12840)x^2 - ( 5880n +19776)x + 7152n + 5046"),
                Some("90n^4 - 900n^3 + 2220n^2 + 756n - 4560"),
            ),
            step(
                2,
                Some("42x^5 - ( 30n + 720)x^4 + (500n + 4280)x^3 - ( 2940n + 9888)x^2 + (7152n + 5046)x - 5990n + 5904"),
                Some("12n^5 - 130n^4 + 200n^3 + 1704n^2 - 5868n + 4664"),
            ),
            step(
                1,
                Some("7x^6 - ( 6n + 144)x^5 + (125n + 1070)x^4 - ( 980n + 3296)x^3 + (3576n + 2523)x^2 + (5904 - 5990n)x + 3628n - 8328"),
                Some("n^6 - 7n^5 - 85n^4 + 1010n^3 - 3588n^2 + 5017n - 2264"),
            ),
            step(0, None, Some("2n^6 - 44n^5 + 363n^4 - 1414n^3 + 2685n^2 - 2304n + 704")),
        ],
    },
    DerivativeChain {
        id: AppendixId::H1,
        min_n: 10,
        steps: &[
            bounded(
                2,
                "96x^2 - ( 48n +48s + 456)x + (16n + 96)s + 168n + 208",
                "48n^2 - ( 32s + 144)n + 48s - 152",
                "16s^2 + 352s + 1192",
            ),
            bounded(
                1,
                "32x^3 - ( 24n + 24s + 228)x^2 + ((16n + 96)s + 168n + 208)x -(56n-112)s- 240n + 400",
                "8n^3 - ( 8s + 12)n^2 + (8s - 248)n + 184s + 412",
                "52s^2 + 608s + 832",
            ),
            ChainStep {
                order: 0,
                derivative: None,
                at_n_plus_1: Some("16n^3 - ( 16s + 172)n^2 + (184s + 392)n - 72s^2 - 152s -124"),
                lower_bound: Some("52s^2 + 688s - 320"),
            },
        ],
    },
    DerivativeChain {
        id: AppendixId::Item(13),
        min_n: 6,
        steps: &[
            step(2, Some("12x^2 - (18n-24)x + 6n^2 - 16n + 6"), Some("14n + 42")),
            step(1, Some("4x^3 - (9n-12 )x^2 + (6n^2 - 16n + 6)x - n^3 + 4n^2 - 7n + 12"), Some("10n + 34")),
        ],
    },
    DerivativeChain {
        id: AppendixId::Item(14),
        min_n: 13,
        steps: &[step(0, None, Some("n-11"))],
    },
    DerivativeChain {
        id: AppendixId::Item(15),
        min_n: 14,
        steps: &[
            step(1, Some("3x^2 - ( 2n + 14)x + 7n"), Some("n^2 - 3n - 11")),
            step(0, None, Some("n^2 - 11n + 6")),
        ],
    },
    DerivativeChain {
        id: AppendixId::Item(16),
        min_n: 11,
        steps: &[step(1, Some("3x^2 - ( 2n + 18)x + 9n + 12"), Some("n^2 - 5n - 3"))],
    },
    DerivativeChain {
        id: AppendixId::Item(17),
        min_n: 8,
        steps: &[step(1, Some("3x^2-(2n+22)x+11n+24"), Some("n^2 - 7n + 5"))],
    },
    DerivativeChain {
        id: AppendixId::H2,
        min_n: 9,
        steps: &[
            step(2, Some("48x^2 - ( 24n + 264)x + 88n + 208"), Some("24n^2 - 104n - 8")),
            bounded(
                1,
                "16x^3- (12n + 132)x^2 +(88n + 208)x - 136n- 48s - 96",
                "4n^3 - 20n^2 - 68n - 48s - 4",
                "4n^3 - 20n^2 - 116n + 284",
            ),
            ChainStep {
                order: 0,
                derivative: None,
                at_n_plus_1: Some("4n^3 - 64n^2 - (48s + 4)n - 240s - 224"),
                lower_bound: Some("4n^3 - 112n^2 + 44n + 1216"),
            },
        ],
    },
];

pub fn derivative_chains() -> &'static [DerivativeChain] {
    CHAINS
}

pub fn derivative_chain(id: AppendixId) -> Option<&'static DerivativeChain> {
    CHAINS.iter().find(|c| c.id == id)
}

/// A printed exact value of a polynomial at `x = n + 2 - 4/(n + 2)`, as a
/// quotient of two polynomials in `n`, together with its claimed sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalClaim {
    pub id: AppendixId,
    pub min_n: usize,
    pub numerator: &'static str,
    pub denominator: &'static str,
    pub positive: bool,
}

static RATIONAL_CLAIMS: &[RationalClaim] = &[
    RationalClaim {
        id: AppendixId::G,
        min_n: 6,
        numerator: "-(8n^3+32n^2+96n+192)",
        denominator: "n^3+6n^2+12n+8",
        positive: false,
    },
    RationalClaim {
        id: AppendixId::Item(13),
        min_n: 6,
        numerator: "10n^5 + 92n^4 + 296n^3 + 800n^2 + 1152n + 576",
        denominator: "n^4 + 8n^3 + 24n^2 + 32n + 16",
        positive: true,
    },
    RationalClaim {
        id: AppendixId::Item(16),
        min_n: 11,
        numerator: "2n^5 - 8n^4 - 62n^3 + 36n^2 + 360n + 208",
        denominator: "n^3 + 6n^2 + 12n + 8",
        positive: true,
    },
    RationalClaim {
        id: AppendixId::Item(17),
        min_n: 8,
        numerator: "2n^5 - 12n^4 - 52n^3 + 160n^2 + 576n + 288",
        denominator: "n^3 + 6n^2 + 12n + 8",
        positive: true,
    },
];

pub fn rational_claims() -> &'static [RationalClaim] {
    RATIONAL_CLAIMS
}

/// `n + 2 - 4/(n + 2)`, the threshold below `q(K^+_{1,1,n-2})`.
pub fn threshold_point(n: usize) -> BigRational {
    let n = BigInt::from(n);
    let two = BigInt::from(2);
    BigRational::from_integer(&n + &two) - BigRational::new(BigInt::from(4), n + two)
}

/// Evaluates a text in `n` and `s` only (no `x`) to an integer.
pub fn parse_integer(text: &str, n: usize, s: Option<usize>) -> BigInt {
    let p = parse_in(text, n, s);
    assert!(p.degree().unwrap_or(0) == 0, "`{text}` depends on x");
    p.coeff(0)
}
