//! Graph families reachable from `pichar graph FAMILY ARGS`.

use pichar_core::gltype::{gamma_prime_gl, Eps, GLParams};
use pichar_core::piclass::{gamma_prime_alt, gamma_prime_sym, gamma_prime_nilpotent, Sylow};
use pichar_core::PrimeGraph;

use crate::{parse_eps, parse_number, CliError, Limits};

pub trait GraphFamily: Send + Sync {
    fn name(&self) -> &'static str;
    fn usage(&self) -> &'static str;
    fn build(&self, args: &[String], limits: &Limits) -> Result<PrimeGraph, CliError>;
}

fn single_n(family: &dyn GraphFamily, args: &[String]) -> Result<usize, CliError> {
    match args {
        [n] => parse_number(n, "N"),
        _ => Err(CliError::Usage(format!("usage: graph {}", family.usage()))),
    }
}

struct Symmetric;

impl GraphFamily for Symmetric {
    fn name(&self) -> &'static str {
        "sym"
    }

    fn usage(&self) -> &'static str {
        "sym N"
    }

    fn build(&self, args: &[String], limits: &Limits) -> Result<PrimeGraph, CliError> {
        let n = limits.check(single_n(self, args)?)?;
        Ok(gamma_prime_sym(n)?)
    }
}

struct Alternating;

impl GraphFamily for Alternating {
    fn name(&self) -> &'static str {
        "alt"
    }

    fn usage(&self) -> &'static str {
        "alt N"
    }

    fn build(&self, args: &[String], limits: &Limits) -> Result<PrimeGraph, CliError> {
        let n = limits.check(single_n(self, args)?)?;
        Ok(gamma_prime_alt(n)?)
    }
}

struct Nilpotent;

impl GraphFamily for Nilpotent {
    fn name(&self) -> &'static str {
        "nilpotent"
    }

    fn usage(&self) -> &'static str {
        "nilpotent P:a|n ... (one entry per Sylow subgroup, a = abelian, n = non-abelian)"
    }

    fn build(&self, args: &[String], _: &Limits) -> Result<PrimeGraph, CliError> {
        if args.is_empty() {
            return Err(CliError::Usage(format!("usage: graph {}", self.usage())));
        }
        let sylows = args
            .iter()
            .map(|arg| {
                let (p, kind) = arg
                    .split_once(':')
                    .ok_or_else(|| CliError::Usage(format!("expected P:a or P:n, got '{arg}'")))?;
                let abelian = match kind {
                    "a" => true,
                    "n" => false,
                    _ => return Err(CliError::Usage(format!("Sylow kind must be 'a' or 'n', got '{kind}'"))),
                };
                Ok(Sylow {
                    prime: parse_number(p, "prime")?,
                    abelian,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(gamma_prime_nilpotent(&sylows)?)
    }
}

struct GeneralLinear;

impl GraphFamily for GeneralLinear {
    fn name(&self) -> &'static str {
        "gl"
    }

    fn usage(&self) -> &'static str {
        "gl N QF [EPS]  (EPS is 1 or -1, default 1)"
    }

    fn build(&self, args: &[String], limits: &Limits) -> Result<PrimeGraph, CliError> {
        let (n, q_f, eps) = match args {
            [n, q] => (n, q, Eps::Plus),
            [n, q, e] => (n, q, parse_eps(e)?),
            _ => return Err(CliError::Usage(format!("usage: graph {}", self.usage()))),
        };
        let n = limits.check(parse_number(n, "N")?)?;
        let params = GLParams::from_field_order(n, parse_number(q_f, "QF")?, eps)?;
        Ok(gamma_prime_gl(&params)?.graph)
    }
}

pub fn families() -> Vec<Box<dyn GraphFamily>> {
    vec![Box::new(Symmetric), Box::new(Alternating), Box::new(Nilpotent), Box::new(GeneralLinear)]
}

pub fn family(name: &str) -> Result<Box<dyn GraphFamily>, CliError> {
    families().into_iter().find(|f| f.name() == name).ok_or_else(|| {
        let names: Vec<&str> = families().iter().map(|f| f.name()).collect();
        CliError::Usage(format!("unknown graph family '{name}' (expected one of {})", names.join(", ")))
    })
}
