use mahonian::bijections::{beta, csv, csv_trace, gk, gk_inverse, render_csv_trace};
use mahonian::foata::{phi_trace, render_trace};
use mahonian::genfun::{self, distribution, Statistic};
use mahonian::partition::lambda;
use mahonian::verify::{self, PairReport, Params, Profile};
use mahonian::{phi, phi_inverse, Family, LaurentPoly, Partition, PartitionSet, Var, Word};
use serde_json::{json, Value};

use crate::{EnumerateArgs, Failure, GenfunArgs, Output, StatArgs, VerifyArgs};

type CmdResult = Result<Output, Failure>;

pub const FAMILY_HELP: &str = "Family name followed by its parameters:
  words K N            every word of length N over {1..K}
  binary N             {1,2}^N
  permutations N       S_N
  rearrangements W     all rearrangements of W
  ballot M N           ballot rearrangements of 1^M 2^N
  catalan N            ballot rearrangements of 1^N 2^N
  no-11 N [K]          binary, no two adjacent ones (exactly K ones)
  no-22 N              binary, no two adjacent twos
  letter-sum N         binary words whose letters sum to N
  max-excess N K       rearrangements of 1^N 2^N with e(w) = K
  max-rank N K         rearrangements of 1^N 2^N with r(lambda(w)) = K
  suffix V             {1,2}* V plus the empty word (needs --max-len)
  ballot-suffix V      ballot members of suffix V (needs --max-len)
  avoiding N P...      permutations of 1..N avoiding every pattern P";

pub const GENFUN_HELP: &str = "Family name followed by its parameters:
  qbinom N K               q-binomial coefficient
  q-integer N              1 + q + ... + q^(N-1)
  q-factorial N            [N]!
  catalan-qt N             sum over ballot words of q^maj t^des
  catalan-triangle-qt N D  the des = D part of catalan-qt N
  catalan-triangle-q N D   (1-q)/(1-q^(N+1)) q-binomial product
  catalan-delta-qt N D     ballot words of 1^N 2^N by q^maj t^des and e = D
  q-catalan N              qbinom(2N, N) / [N+1]
  fib N                    sum over no-11 words of q^maj t^(#ones)
  fib-t1 N                 fib N at t = 1
  lucas N                  Lucas polynomial {N} in s, t
  lucas-factorial N        {1}{2}...{N}
  lucanomial N K           {N}!/({K}!{N-K}!)
  st-catalan N             lucanomial(2N, N) / {N+1}
  carlitz                  sum_k q^(k^2-k)/(q)_k, truncated
  product-no-part T        prod over parts i != T of 1/(1-q^i), truncated
  product-mod M R          prod over parts i != 0, +-R mod M of 1/(1-q^i), truncated
  partitions SET ...       size generating function of a partition set, truncated;
                           SET is all | ranks-at-least T | ranks-at-most T |
                           ranks-in LO HI | no-part T | no-part-mod M R";

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_word(s: &str) -> Result<Word, Failure> {
    Ok(s.parse::<Word>()?)
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    if !s.trim_start().starts_with('(') {
        return Err(usage(format!("expected a partition such as (3,1), got {s:?}")));
    }
    Ok(s.parse::<Partition>()?)
}

fn int<T: std::str::FromStr>(args: &[String], i: usize, name: &str) -> Result<T, Failure> {
    let raw = args
        .get(i)
        .ok_or_else(|| usage(format!("missing parameter {name}")))?;
    raw.parse()
        .map_err(|_| usage(format!("parameter {name} must be an integer, got {raw:?}")))
}

fn arity(args: &[String], n: usize, family: &str) -> Result<(), Failure> {
    if args.len() == n {
        Ok(())
    } else {
        Err(usage(format!("{family} takes {n} parameter(s), got {}", args.len())))
    }
}

pub fn stat(a: &StatArgs) -> CmdResult {
    let w = parse_word(&a.word)?;
    let mut wanted: Vec<&str> = [
        (a.maj, "maj"),
        (a.inv, "inv"),
        (a.des, "des"),
        (a.exc, "exc"),
        (a.e, "e"),
        (a.pairs, "p"),
        (a.len, "len"),
        (a.ballot, "ballot"),
    ]
    .iter()
    .filter(|(on, _)| *on)
    .map(|&(_, name)| name)
    .collect();
    if wanted.is_empty() {
        wanted = vec!["maj", "inv", "des", "exc"];
        if w.is_binary() {
            wanted.extend(["e", "p"]);
        }
    }
    let mut json = serde_json::Map::new();
    json.insert("word".into(), json!(w.to_string()));
    let mut shown = Vec::new();
    for name in &wanted {
        let value = match *name {
            "maj" => json!(w.maj()),
            "inv" => json!(w.inv()),
            "des" => json!(w.des()),
            "exc" => json!(w.exc()),
            "e" => json!(w.max_excess()?),
            "p" => json!(w.pairing()?.pairs.len()),
            "len" => json!(w.len()),
            _ => json!(w.is_ballot()),
        };
        shown.push((name.to_string(), value.to_string()));
        json.insert(name.to_string(), value);
    }
    let text = if shown.len() == 1 {
        shown[0].1.clone()
    } else {
        shown
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    Ok(Output { text, json: Value::Object(json) })
}

fn word_out(map: &str, input: &str, out: String) -> Output {
    Output {
        json: json!({ "map": map, "input": input, "output": out }),
        text: out,
    }
}

pub fn map(name: &str, input: &str, trace: bool) -> CmdResult {
    if trace && !matches!(name, "phi" | "csv") {
        return Err(usage(format!("--trace is available for phi and csv, not {name}")));
    }
    match name {
        "phi" => {
            let v = parse_word(input)?;
            let image = phi(&v);
            if !trace {
                return Ok(word_out(name, &v.to_string(), image.to_string()));
            }
            let stages = phi_trace(&v);
            let rows: Vec<Value> = stages
                .iter()
                .map(|st| {
                    json!({
                        "word": st.word.to_string(),
                        "factors": st.factors.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                        "next_letter": st.next_letter,
                    })
                })
                .collect();
            Ok(Output {
                text: render_trace(&v, &stages),
                json: json!({ "map": name, "input": v.to_string(), "output": image.to_string(), "trace": rows }),
            })
        }
        "phi-inv" => {
            let w = parse_word(input)?;
            Ok(word_out(name, &w.to_string(), phi_inverse(&w).to_string()))
        }
        "prime" => {
            let w = parse_word(input)?;
            Ok(word_out(name, &w.to_string(), w.prime()?.to_string()))
        }
        "gk" => {
            let w = parse_word(input)?;
            Ok(word_out(name, &w.to_string(), gk(&w)?.to_string()))
        }
        "gk-inv" => {
            let w = parse_word(input)?;
            Ok(word_out(name, &w.to_string(), gk_inverse(&w)?.to_string()))
        }
        "beta" => {
            let w = parse_word(input)?;
            let (x, y) = beta(&w)?;
            Ok(Output {
                text: format!("({x}, {y})"),
                json: json!({ "map": name, "input": w.to_string(), "output": [x.to_string(), y.to_string()] }),
            })
        }
        "lambda" => {
            let w = parse_word(input)?;
            let boxed = lambda(&w)?;
            Ok(Output {
                text: boxed.partition.to_string(),
                json: json!({
                    "map": name,
                    "input": w.to_string(),
                    "output": boxed.partition.to_string(),
                    "rows": boxed.rows,
                    "cols": boxed.cols,
                }),
            })
        }
        "boundary" => {
            let la = parse_partition(input)?;
            Ok(word_out(name, &la.to_string(), la.boundary_word()?.to_string()))
        }
        "csv" => {
            let la = parse_partition(input)?;
            if !trace {
                return Ok(word_out(name, &la.to_string(), csv(&la)?.to_string()));
            }
            let stages = csv_trace(&la)?;
            let out = stages.last().map(|s| s.partition.to_string()).unwrap_or_default();
            let rows: Vec<Value> = stages
                .iter()
                .map(|st| {
                    json!({
                        "partition": st.partition.to_string(),
                        "ranks": st.ranks,
                        "r": st.max_rank,
                        "i": st.max_rank_index,
                        "w": st.boundary.to_string(),
                        "v": st.preimage.to_string(),
                        "excesses": st.excesses,
                    })
                })
                .collect();
            Ok(Output {
                text: render_csv_trace(&stages),
                json: json!({ "map": name, "input": la.to_string(), "output": out, "trace": rows }),
            })
        }
        other => Err(usage(format!(
            "unknown map {other:?}; expected one of phi, phi-inv, beta, csv, gk, gk-inv, prime, lambda, boundary"
        ))),
    }
}

fn family_of(name: &str, args: &[String], max_len: Option<usize>) -> Result<Family, Failure> {
    let f = match name {
        "words" => {
            arity(args, 2, name)?;
            Family::Words { alphabet: int(args, 0, "K")?, len: int(args, 1, "N")? }
        }
        "binary" => {
            arity(args, 1, name)?;
            Family::Binary(int(args, 0, "N")?)
        }
        "permutations" => {
            arity(args, 1, name)?;
            Family::Permutations(int(args, 0, "N")?)
        }
        "rearrangements" => {
            arity(args, 1, name)?;
            Family::Rearrangements(parse_word(&args[0])?)
        }
        "ballot" => {
            arity(args, 2, name)?;
            Family::Ballot { ones: int(args, 0, "M")?, twos: int(args, 1, "N")? }
        }
        "catalan" => {
            arity(args, 1, name)?;
            Family::Catalan(int(args, 0, "N")?)
        }
        "no-11" if args.len() == 2 => Family::NoAdjacentOnesWithOnes {
            len: int(args, 0, "N")?,
            ones: int(args, 1, "K")?,
        },
        "no-11" => {
            arity(args, 1, name)?;
            Family::NoAdjacentOnes(int(args, 0, "N")?)
        }
        "no-22" => {
            arity(args, 1, name)?;
            Family::NoAdjacentTwos(int(args, 0, "N")?)
        }
        "letter-sum" => {
            arity(args, 1, name)?;
            Family::LetterSum(int(args, 0, "N")?)
        }
        "max-excess" => {
            arity(args, 2, name)?;
            Family::MaxExcess { n: int(args, 0, "N")?, k: int(args, 1, "K")? }
        }
        "max-rank" => {
            arity(args, 2, name)?;
            Family::MaxRank { n: int(args, 0, "N")?, k: int(args, 1, "K")? }
        }
        "suffix" => {
            arity(args, 1, name)?;
            Family::Suffix { suffix: parse_word(&args[0])?, max_len }
        }
        "ballot-suffix" => {
            arity(args, 1, name)?;
            Family::BallotSuffix { suffix: parse_word(&args[0])?, max_len }
        }
        "avoiding" => {
            if args.is_empty() {
                return Err(usage("avoiding takes N followed by patterns"));
            }
            let patterns = args[1..].iter().map(|p| parse_word(p)).collect::<Result<_, _>>()?;
            Family::Avoiding { n: int(args, 0, "N")?, patterns }
        }
        other => return Err(usage(format!("unknown family {other:?}\n{FAMILY_HELP}"))),
    };
    Ok(f)
}

fn parse_stats(spec: &str) -> Result<Vec<(Statistic, Var)>, Failure> {
    spec.split(',')
        .map(|item| {
            let (stat, var) = item
                .split_once(':')
                .ok_or_else(|| usage(format!("expected STAT:VAR, got {item:?}")))?;
            let stat = match stat.trim() {
                "maj" => Statistic::Maj,
                "inv" => Statistic::Inv,
                "des" => Statistic::Des,
                "exc" => Statistic::Exc,
                "e" => Statistic::MaxExcess,
                "len" => Statistic::Length,
                other => return Err(usage(format!("unknown statistic {other:?}"))),
            };
            let var = Var::from_name(var.trim())
                .ok_or_else(|| usage(format!("unknown variable {var:?}")))?;
            Ok((stat, var))
        })
        .collect()
}

fn poly_output(label: String, p: &LaurentPoly) -> Output {
    Output {
        text: p.to_string(),
        json: json!({ "family": label, "polynomial": p.to_string(), "terms": p.to_json() }),
    }
}

pub fn enumerate(a: &EnumerateArgs) -> CmdResult {
    let family = family_of(&a.family, &a.args, a.max_len)?;
    let words = family.enumerate()?;
    let label = family.to_string();
    if let Some(spec) = &a.stats {
        let p = distribution(&words, &parse_stats(spec)?)?;
        return Ok(poly_output(label, &p));
    }
    if a.count {
        return Ok(Output {
            text: words.len().to_string(),
            json: json!({ "family": label, "count": words.len() }),
        });
    }
    let listed: Vec<String> = words.iter().map(|w| w.to_string()).collect();
    Ok(Output {
        // the empty word is listed as ε so that it stays visible
        text: listed
            .iter()
            .map(|w| if w.is_empty() { "ε" } else { w.as_str() })
            .collect::<Vec<_>>()
            .join("\n"),
        json: json!({ "family": label, "count": words.len(), "words": listed }),
    })
}

fn partition_set(args: &[String]) -> Result<PartitionSet, Failure> {
    let name = args.first().map(String::as_str).unwrap_or("");
    let rest = &args[args.len().min(1)..];
    let set = match name {
        "all" => {
            arity(rest, 0, name)?;
            PartitionSet::All
        }
        "ranks-at-least" => {
            arity(rest, 1, name)?;
            PartitionSet::RanksAtLeast(int(rest, 0, "T")?)
        }
        "ranks-at-most" => {
            arity(rest, 1, name)?;
            PartitionSet::RanksAtMost(int(rest, 0, "T")?)
        }
        "ranks-in" => {
            arity(rest, 2, name)?;
            PartitionSet::RanksInInterval(int(rest, 0, "LO")?, int(rest, 1, "HI")?)
        }
        "no-part" => {
            arity(rest, 1, name)?;
            PartitionSet::NoPartEqual(int(rest, 0, "T")?)
        }
        "no-part-mod" => {
            arity(rest, 2, name)?;
            PartitionSet::rogers_ramanujan_type(int(rest, 0, "M")?, int(rest, 1, "R")?)
        }
        other => return Err(usage(format!("unknown partition set {other:?}"))),
    };
    Ok(set)
}

fn modulus_args(args: &[String]) -> Result<(usize, usize), Failure> {
    arity(args, 2, "product-mod")?;
    let (m, r): (usize, usize) = (int(args, 0, "M")?, int(args, 1, "R")?);
    if m == 0 {
        return Err(usage("modulus must be positive"));
    }
    Ok((m, r))
}

pub fn genfun(a: &GenfunArgs) -> CmdResult {
    let args = &a.args;
    let name = a.family.as_str();
    let n = a.truncate;
    let one = |name: &str| -> Result<i64, Failure> {
        arity(args, 1, name)?;
        int(args, 0, "N")
    };
    let two = |name: &str| -> Result<(i64, i64), Failure> {
        arity(args, 2, name)?;
        Ok((int(args, 0, "N")?, int(args, 1, "K")?))
    };
    let size = |k: i64| -> Result<usize, Failure> {
        usize::try_from(k).map_err(|_| usage(format!("{name} needs a nonnegative parameter")))
    };
    let p = match name {
        "qbinom" => {
            let (n, k) = two(name)?;
            genfun::q_binomial(n, k)
        }
        "q-integer" => LaurentPoly::q_integer(size(one(name)?)?),
        "q-factorial" => genfun::q_factorial(size(one(name)?)?),
        "catalan-qt" => genfun::catalan_qt(size(one(name)?)?),
        "catalan-triangle-qt" => {
            let (n, d) = two(name)?;
            genfun::catalan_triangle_qt(n, d)
        }
        "catalan-triangle-q" => {
            let (n, d) = two(name)?;
            genfun::catalan_triangle_q(n, d)
        }
        "catalan-delta-qt" => {
            let (n, d) = two(name)?;
            genfun::catalan_delta_qt(n, d)
        }
        "q-catalan" => genfun::q_catalan(size(one(name)?)?),
        "fib" => genfun::fib_poly(size(one(name)?)?),
        "fib-t1" => genfun::fib_poly_at_t1(size(one(name)?)?),
        "lucas" => genfun::lucas_poly(size(one(name)?)?),
        "lucas-factorial" => genfun::lucas_factorial(size(one(name)?)?),
        "lucanomial" => {
            let (n, k) = two(name)?;
            genfun::lucanomial(n, k)?
        }
        "st-catalan" => genfun::st_catalan(size(one(name)?)?)?,
        "carlitz" => {
            arity(args, 0, name)?;
            genfun::carlitz_series(n)
        }
        "product-no-part" => {
            let t = size(one(name)?)?;
            genfun::truncated_product(|i| i != t, n)
        }
        "product-mod" => {
            let (m, r) = modulus_args(args)?;
            genfun::truncated_product(|i| ![0, r % m, (m - r % m) % m].contains(&(i % m)), n)
        }
        "partitions" => {
            let set = partition_set(args)?;
            set.enumerate(n)
                .iter()
                .map(|la| LaurentPoly::var_pow(Var::Q, la.size() as i32))
                .sum()
        }
        other => return Err(usage(format!("unknown family {other:?}\n{GENFUN_HELP}"))),
    };
    let p = match &a.vars {
        Some(keep) => {
            let mut subs = Vec::new();
            for v in [Var::Q, Var::T, Var::Z, Var::S] {
                if !keep.iter().any(|k| k == v.name()) {
                    subs.push((v, LaurentPoly::one()));
                }
            }
            for k in keep {
                if Var::from_name(k).is_none() {
                    return Err(usage(format!("unknown variable {k:?}")));
                }
            }
            p.substitute(&subs)?
        }
        None => p,
    };
    let label = std::iter::once(a.family.clone())
        .chain(args.iter().cloned())
        .collect::<Vec<_>>()
        .join(" ");
    Ok(poly_output(label, &p))
}

fn overrides(a: &VerifyArgs) -> Result<Params, Failure> {
    let mut params = Params::new();
    let named = [
        ("n", a.n),
        ("size", a.size),
        ("max_size", a.max_size),
        ("max_len", a.max_len),
        ("binary_len", a.binary_len),
        ("ternary_len", a.ternary_len),
        ("degree", a.degree),
        ("max_modulus", a.max_modulus),
        ("max_j", a.max_j),
    ];
    for (k, v) in named {
        if let Some(v) = v {
            params.insert(k.to_string(), v);
        }
    }
    for item in &a.set {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| usage(format!("expected KEY=VALUE, got {item:?}")))?;
        let v = v
            .trim()
            .parse()
            .map_err(|_| usage(format!("value for {k} must be a nonnegative integer")))?;
        params.insert(k.trim().replace('-', "_"), v);
    }
    Ok(params)
}

fn check_list() -> String {
    verify::registry()
        .iter()
        .map(|c| format!("  {:<28} {}", c.id, c.summary))
        .collect::<Vec<_>>()
        .join("\n")
}

fn reports_output(reports: &[PairReport]) -> Output {
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let mut lines: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
    lines.push(format!("{} passed, {failed} failed", reports.len() - failed));
    Output {
        text: lines.join("\n"),
        json: Value::Array(reports.iter().map(PairReport::to_json).collect()),
    }
}

pub fn verify(a: &VerifyArgs) -> CmdResult {
    if a.list {
        let ids: Vec<Value> = verify::registry()
            .iter()
            .map(|c| json!({ "check": c.id, "summary": c.summary, "empirical": c.empirical }))
            .collect();
        return Ok(Output { text: check_list(), json: Value::Array(ids) });
    }
    let profile: Profile = a.profile.parse()?;
    let params = overrides(a)?;
    let reports = match (&a.check, a.all) {
        (Some(_), true) => return Err(usage("give either a check id or --all, not both")),
        (None, false) => {
            return Err(usage(format!("name a check or pass --all; checks:\n{}", check_list())))
        }
        (Some(id), false) => {
            let report = verify::check_named(id, profile, &params).map_err(|e| match e {
                mahonian::Error::UnknownCheck(_) => {
                    usage(format!("{e}; available checks:\n{}", check_list()))
                }
                other => usage(other.to_string()),
            })?;
            vec![report]
        }
        (None, true) => {
            for k in params.keys() {
                let used = verify::registry()
                    .iter()
                    .any(|c| c.defaults(profile).contains_key(k));
                if !used {
                    return Err(usage(format!("no check takes parameter {k:?}")));
                }
            }
            verify::run_suite_with(profile, |_| true, &params)
        }
    };
    let out = reports_output(&reports);
    if reports.iter().all(PairReport::passed) {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}
