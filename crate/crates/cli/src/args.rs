use std::ops::RangeInclusive;

use artinforge::groebner::DEFAULT_PAIR_CAP;
use artinforge::paperlab::{claim, claims, Which};
use artinforge::polyarith::TermOrder;
use clap::{Args, Parser, Subcommand, ValueEnum};

pub const MIN_N: usize = 2;
pub const MAX_DEFAULT_N: usize = 7;
pub const MAX_N: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "artinforge", version, about = "Exact checks for a family of zero-dimensional binomial ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run registered claims over a range of n.
    Verify(VerifyArgs),
    /// Print the reduced Gröbner basis of a named ideal.
    Groebner(IdealArgs),
    /// Print the Hilbert function of the quotient by a named ideal.
    Hilbert(IdealArgs),
    /// Print a symmetric-group character.
    Character(CharacterArgs),
    /// Print the socle of the quotient by a named ideal.
    Socle(IdealArgs),
    /// Print the graded character of the quotient by the top-form ideal.
    Challenge(SingleArgs),
    /// List the points of the zero set and check them exactly.
    Points(SingleArgs),
    /// Print rows of the symmetrised Bernoulli triangle.
    Triangle(TriangleArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Cap on the number of queued S-pairs in a single Buchberger run.
    #[arg(long, env = "ARTINFORGE_PAIR_CAP", default_value_t = DEFAULT_PAIR_CAP)]
    pub pair_cap: usize,
    /// Permit n = 8.
    #[arg(long)]
    pub allow_large_n: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Parameter range, `A..B` (inclusive) or a single value.
    #[arg(long, value_parser = parse_range, default_value = "2..7")]
    pub n: NRange,
    /// Comma-separated claim ids, or `all`.
    #[arg(long, value_parser = parse_claims, default_value = "all")]
    pub claims: ClaimList,
    /// Number of worker threads.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,
    /// Report measured run times (otherwise `millis` is 0 so output is reproducible).
    #[arg(long)]
    pub timings: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct IdealArgs {
    /// One of I, J, K, L, Q.
    #[arg(long, value_parser = parse_ideal)]
    pub ideal: Which,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = parse_order, default_value = "grevlex")]
    pub order: TermOrder,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CharacterKind {
    /// Permutation character on the points of the zero set.
    Points,
    /// All subsets.
    Powerset,
    /// Even-size subsets (odd n only).
    HalfPowerset,
    /// Subsets of size --k.
    Subset,
}

#[derive(Args, Debug)]
pub struct CharacterArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = CharacterKind::Points)]
    pub kind: CharacterKind,
    /// Subset size for `--kind subset`.
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct SingleArgs {
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct TriangleArgs {
    #[arg(long, value_parser = parse_range, default_value = "2..7")]
    pub n: NRange,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl NRange {
    pub fn iter(&self) -> RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

fn parse_range(s: &str) -> Result<NRange, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("{t:?} is not a non-negative integer"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(NRange { lo, hi })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimList(pub Vec<&'static str>);

fn parse_claims(s: &str) -> Result<ClaimList, String> {
    if s == "all" {
        return Ok(ClaimList(claims().iter().map(|c| c.id).collect()));
    }
    let mut out = Vec::new();
    for id in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let c = claim(id).ok_or_else(|| {
            let known: Vec<&str> = claims().iter().map(|c| c.id).collect();
            format!("unknown claim {id:?}; known claims: {}", known.join(", "))
        })?;
        if !out.contains(&c.id) {
            out.push(c.id);
        }
    }
    if out.is_empty() {
        return Err("no claims selected".into());
    }
    Ok(ClaimList(out))
}

fn parse_ideal(s: &str) -> Result<Which, String> {
    match s {
        "g" => Err("the dual generator is not an ideal; choose I, J, K, L or Q".into()),
        _ => s.parse().map_err(|e: artinforge::Error| e.to_string()),
    }
}

fn parse_order(s: &str) -> Result<TermOrder, String> {
    s.parse().map_err(|e: artinforge::Error| e.to_string())
}

/// Checks n bounds that clap cannot express; the message goes to a usage error.
pub fn check_n(lo: usize, hi: usize, allow_large: bool) -> Result<(), String> {
    if lo < MIN_N || hi > MAX_N {
        return Err(format!("n must lie in {MIN_N}..{MAX_N}"));
    }
    if hi > MAX_DEFAULT_N && !allow_large {
        return Err(format!("n = {hi} needs --allow-large-n"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..6").unwrap(), NRange { lo: 2, hi: 6 });
        assert_eq!(parse_range("4").unwrap(), NRange { lo: 4, hi: 4 });
        assert_eq!(parse_range("3..=5").unwrap(), NRange { lo: 3, hi: 5 });
        assert!(parse_range("6..2").is_err());
        assert!(parse_range("a..2").is_err());
        assert!(check_n(2, 7, false).is_ok());
        assert!(check_n(2, 8, false).is_err());
        assert!(check_n(8, 8, true).is_ok());
        assert!(check_n(1, 3, true).is_err());
    }

    #[test]
    fn claim_lists() {
        assert_eq!(parse_claims("all").unwrap().0.len(), claims().len());
        assert_eq!(parse_claims("thm1,thm2,thm1").unwrap().0, vec!["thm1", "thm2"]);
        assert!(parse_claims("thm1,nope").is_err());
    }

    #[test]
    fn cli_is_well_formed() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
