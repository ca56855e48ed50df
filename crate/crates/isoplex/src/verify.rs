//! Certificate files and their exact replay checker.
//!
//! A certificate records everything the solve loop concluded: the fan (rays
//! and cones), the interpolant values at the rays, and one split tree per
//! face whose leaves carry sign claims or separating directions. The checker
//! rebuilds the fan, revalidates its geometry, recomputes the interpolant
//! values, and replays every tree leaf **in integer arithmetic**: rational
//! inputs are cleared to integers by positive scalings, which change no sign
//! and no strict inequality, so a passing replay is an unconditional proof.
//!
//! Two failure modes are kept distinct: [`CertError::Malformed`] (the file
//! cannot be read as a certificate at all) and [`CertError::Rejected`] (the
//! file is well-formed but some claim does not hold).
//!
//! # File format
//!
//! ```text
//! [header]
//! nvars 3
//! m 1
//! degrees 2
//! [vertices]
//! v 0 1 0 0
//! ...
//! [cones]
//! c 0 0 2 4
//! ...
//! [tilde]
//! t 0 1
//! ...
//! [face 0 2]
//! (sep (+ 1 1 0))
//! ```
//!
//! Vertex ids must be `0..n` in order; cone ids must be strictly increasing;
//! `t <vertex> <m rationals>`; each `[face ...]` section holds exactly one
//! expression built from `(split <i>-<j> <left> <right>)`,
//! `(sign <poly> <+|->)`, and `(sep (<signs> <rationals...>) ...)`.

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{f64_to_rat, solve_mat, Sign};
use crate::bernstein::{matrix_form, BernsteinForm, IntBern};
use crate::criterion::{sign_orbits, CertNode};
use crate::driver::SolveResult;
use crate::poly::{gradient_terms, substitute_terms, PolySystem};
use crate::simplex::{ConeId, Decomposition, VertexId};

/// A face's split tree with exact witnesses, as stored in a file.
#[derive(Clone, Debug, PartialEq)]
pub enum CertExpr {
    Split {
        edge: (usize, usize),
        left: Box<CertExpr>,
        right: Box<CertExpr>,
    },
    Sign {
        poly: usize,
        sign: Sign,
    },
    Sep {
        witnesses: Vec<(Vec<Sign>, Vec<BigRational>)>,
    },
}

/// Parsed certificate file.
#[derive(Clone, Debug)]
pub struct CertificateFile {
    pub nvars: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    pub rays: Vec<Vec<BigInt>>,
    pub cones: Vec<Vec<VertexId>>,
    pub tilde: Vec<Vec<BigRational>>,
    pub faces: Vec<(Vec<VertexId>, CertExpr)>,
}

#[derive(Debug, thiserror::Error)]
pub enum CertError {
    /// The input is not a certificate (syntax, ids, structure of the text).
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    /// The certificate is readable but some claim fails exact replay.
    #[error("rejected at face {face:?} (path `{path}`): {reason}")]
    Rejected {
        face: Vec<VertexId>,
        path: String,
        reason: String,
    },
}

fn rejected(face: &[VertexId], path: &str, reason: impl Into<String>) -> CertError {
    CertError::Rejected {
        face: face.to_vec(),
        path: path.into(),
        reason: reason.into(),
    }
}

/// What a successful check covered.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub faces: usize,
    pub leaves: usize,
    pub wall: Duration,
}

// ---------------------------------------------------------------------------
// formatting

fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_expr(node: &CertNode, out: &mut String) {
    match node {
        CertNode::Split { edge, left, right } => {
            out.push_str(&format!("(split {}-{} ", edge.0, edge.1));
            fmt_expr(left, out);
            out.push(' ');
            fmt_expr(right, out);
            out.push(')');
        }
        CertNode::Sign { poly, sign } => {
            out.push_str(&format!("(sign {poly} {})", sign.as_char()));
        }
        CertNode::Sep { witnesses } => {
            out.push_str("(sep");
            for (sigma, n) in witnesses {
                out.push_str(" (");
                for s in sigma {
                    out.push(s.as_char());
                }
                for x in n {
                    out.push(' ');
                    out.push_str(&fmt_rat(&f64_to_rat(*x)));
                }
                out.push(')');
            }
            out.push(')');
        }
    }
}

/// Serialize a solve result as a certificate file.
pub fn format_certificate(sys: &PolySystem, res: &SolveResult) -> String {
    let mut out = String::new();
    out.push_str("[header]\n");
    out.push_str(&format!("nvars {}\n", sys.nvars()));
    out.push_str(&format!("m {}\n", sys.m()));
    let degs: Vec<String> = sys.degrees().iter().map(|d| d.to_string()).collect();
    out.push_str(&format!("degrees {}\n", degs.join(" ")));
    out.push_str("[vertices]\n");
    for v in 0..res.decomp.num_vertices() {
        let coords: Vec<String> = res.decomp.ray(v).iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("v {v} {}\n", coords.join(" ")));
    }
    out.push_str("[cones]\n");
    for c in res.decomp.cone_ids() {
        let vs: Vec<String> = res.decomp.cone(c).iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("c {c} {}\n", vs.join(" ")));
    }
    out.push_str("[tilde]\n");
    for v in 0..res.tilde.num_vertices() {
        let vals: Vec<String> = (0..sys.m())
            .map(|i| fmt_rat(res.tilde.exact(v, i)))
            .collect();
        out.push_str(&format!("t {v} {}\n", vals.join(" ")));
    }
    for (face, cert) in &res.certs {
        let ids: Vec<String> = face.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("[face {}]\n", ids.join(" ")));
        let mut line = String::new();
        fmt_expr(&cert.node, &mut line);
        out.push_str(&line);
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// parsing

fn malformed(line: usize, msg: impl Into<String>) -> CertError {
    CertError::Malformed {
        line,
        msg: msg.into(),
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize, CertError> {
    tok.parse()
        .map_err(|_| malformed(line, format!("expected a number, got `{tok}`")))
}

fn parse_bigint(tok: &str, line: usize) -> Result<BigInt, CertError> {
    tok.parse()
        .map_err(|_| malformed(line, format!("expected an integer, got `{tok}`")))
}

fn parse_rat(tok: &str, line: usize) -> Result<BigRational, CertError> {
    let (n, d) = match tok.split_once('/') {
        Some((n, d)) => (n, d),
        None => (tok, "1"),
    };
    let n = parse_bigint(n, line)?;
    let d = parse_bigint(d, line)?;
    if d.is_zero() {
        return Err(malformed(line, format!("zero denominator in `{tok}`")));
    }
    Ok(BigRational::new(n, d))
}

fn tokenize_expr(s: &str) -> Vec<String> {
    s.replace('(', " ( ")
        .replace(')', " ) ")
        .split_whitespace()
        .map(str::to_string)
        .collect()
}

fn parse_expr(toks: &[String], pos: &mut usize, line: usize) -> Result<CertExpr, CertError> {
    let open = toks
        .get(*pos)
        .ok_or_else(|| malformed(line, "unexpected end of expression"))?;
    if open != "(" {
        return Err(malformed(line, format!("expected `(`, got `{open}`")));
    }
    *pos += 1;
    let head = toks
        .get(*pos)
        .ok_or_else(|| malformed(line, "unexpected end of expression"))?
        .clone();
    *pos += 1;
    let node = match head.as_str() {
        "split" => {
            let edge_tok = toks
                .get(*pos)
                .ok_or_else(|| malformed(line, "split needs an edge"))?;
            let (i, j) = edge_tok
                .split_once('-')
                .ok_or_else(|| malformed(line, format!("bad edge `{edge_tok}`")))?;
            let edge = (parse_usize(i, line)?, parse_usize(j, line)?);
            *pos += 1;
            let left = parse_expr(toks, pos, line)?;
            let right = parse_expr(toks, pos, line)?;
            CertExpr::Split {
                edge,
                left: Box::new(left),
                right: Box::new(right),
            }
        }
        "sign" => {
            let poly = parse_usize(
                toks.get(*pos)
                    .ok_or_else(|| malformed(line, "sign needs an equation index"))?,
                line,
            )?;
            *pos += 1;
            let ch = toks
                .get(*pos)
                .ok_or_else(|| malformed(line, "sign needs a sign"))?;
            let sign = match ch.as_str() {
                "+" => Sign::Pos,
                "-" => Sign::Neg,
                other => return Err(malformed(line, format!("bad sign `{other}`"))),
            };
            *pos += 1;
            CertExpr::Sign { poly, sign }
        }
        "sep" => {
            let mut witnesses = Vec::new();
            while toks.get(*pos).map(String::as_str) == Some("(") {
                *pos += 1;
                let sig_tok = toks
                    .get(*pos)
                    .ok_or_else(|| malformed(line, "witness needs signs"))?;
                let sigma: Vec<Sign> = sig_tok
                    .chars()
                    .map(|c| {
                        Sign::from_char(c)
                            .ok_or_else(|| malformed(line, format!("bad sign char `{c}`")))
                    })
                    .collect::<Result<_, _>>()?;
                *pos += 1;
                let mut vec = Vec::new();
                while let Some(t) = toks.get(*pos) {
                    if t == ")" {
                        break;
                    }
                    vec.push(parse_rat(t, line)?);
                    *pos += 1;
                }
                if toks.get(*pos).map(String::as_str) != Some(")") {
                    return Err(malformed(line, "unterminated witness"));
                }
                *pos += 1;
                witnesses.push((sigma, vec));
            }
            CertExpr::Sep { witnesses }
        }
        other => return Err(malformed(line, format!("unknown node `{other}`"))),
    };
    if toks.get(*pos).map(String::as_str) != Some(")") {
        return Err(malformed(line, "missing `)`"));
    }
    *pos += 1;
    Ok(node)
}

/// Parse a certificate file. Only questions of form are decided here; all
/// geometric and arithmetic claims are left to [`check_certificate`].
pub fn parse_certificate(input: &str) -> Result<CertificateFile, CertError> {
    #[derive(PartialEq)]
    enum Section {
        Start,
        Header,
        Vertices,
        Cones,
        Tilde,
        Face,
    }
    let mut section = Section::Start;
    let mut nvars = None;
    let mut m = None;
    let mut degrees: Option<Vec<usize>> = None;
    let mut rays: Vec<Vec<BigInt>> = Vec::new();
    let mut cones: Vec<Vec<VertexId>> = Vec::new();
    let mut last_cone_id: Option<usize> = None;
    let mut tilde: Vec<Vec<BigRational>> = Vec::new();
    let mut faces: Vec<(Vec<VertexId>, CertExpr)> = Vec::new();
    let mut pending_face: Option<(usize, Vec<VertexId>)> = None;

    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('[') {
            if let Some((l, f)) = pending_face.take() {
                return Err(malformed(l, format!("face {f:?} has no expression")));
            }
            let inner = line
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| malformed(line_no, "unterminated section header"))?;
            section = match inner {
                "header" => Section::Header,
                "vertices" => Section::Vertices,
                "cones" => Section::Cones,
                "tilde" => Section::Tilde,
                _ => {
                    let mut toks = inner.split_whitespace();
                    if toks.next() != Some("face") {
                        return Err(malformed(line_no, format!("unknown section `{inner}`")));
                    }
                    let ids: Vec<usize> = toks
                        .map(|t| parse_usize(t, line_no))
                        .collect::<Result<_, _>>()?;
                    if ids.is_empty() {
                        return Err(malformed(line_no, "empty face"));
                    }
                    if ids.windows(2).any(|w| w[0] >= w[1]) {
                        return Err(malformed(line_no, "face ids must strictly increase"));
                    }
                    pending_face = Some((line_no, ids));
                    Section::Face
                }
            };
            continue;
        }
        match section {
            Section::Start => return Err(malformed(line_no, "content before [header]")),
            Section::Header => {
                let mut toks = line.split_whitespace();
                match toks.next() {
                    Some("nvars") => {
                        let v = toks
                            .next()
                            .ok_or_else(|| malformed(line_no, "nvars needs a value"))?;
                        nvars = Some(parse_usize(v, line_no)?);
                    }
                    Some("m") => {
                        let v = toks
                            .next()
                            .ok_or_else(|| malformed(line_no, "m needs a value"))?;
                        m = Some(parse_usize(v, line_no)?);
                    }
                    Some("degrees") => {
                        degrees = Some(
                            toks.map(|t| parse_usize(t, line_no))
                                .collect::<Result<_, _>>()?,
                        );
                    }
                    other => {
                        return Err(malformed(
                            line_no,
                            format!("unknown header entry `{}`", other.unwrap_or("")),
                        ))
                    }
                }
            }
            Section::Vertices => {
                let mut toks = line.split_whitespace();
                if toks.next() != Some("v") {
                    return Err(malformed(line_no, "expected `v <id> <coords>`"));
                }
                let id = parse_usize(
                    toks.next()
                        .ok_or_else(|| malformed(line_no, "missing vertex id"))?,
                    line_no,
                )?;
                if id != rays.len() {
                    return Err(malformed(
                        line_no,
                        format!("vertex ids must be consecutive; expected {}", rays.len()),
                    ));
                }
                let coords: Vec<BigInt> = toks
                    .map(|t| parse_bigint(t, line_no))
                    .collect::<Result<_, _>>()?;
                rays.push(coords);
            }
            Section::Cones => {
                let mut toks = line.split_whitespace();
                if toks.next() != Some("c") {
                    return Err(malformed(line_no, "expected `c <id> <vertex ids>`"));
                }
                let id = parse_usize(
                    toks.next()
                        .ok_or_else(|| malformed(line_no, "missing cone id"))?,
                    line_no,
                )?;
                if let Some(prev) = last_cone_id {
                    if id <= prev {
                        return Err(malformed(line_no, "cone ids must strictly increase"));
                    }
                }
                last_cone_id = Some(id);
                let vs: Vec<usize> = toks
                    .map(|t| parse_usize(t, line_no))
                    .collect::<Result<_, _>>()?;
                cones.push(vs);
            }
            Section::Tilde => {
                let mut toks = line.split_whitespace();
                if toks.next() != Some("t") {
                    return Err(malformed(line_no, "expected `t <vertex> <values>`"));
                }
                let id = parse_usize(
                    toks.next()
                        .ok_or_else(|| malformed(line_no, "missing vertex id"))?,
                    line_no,
                )?;
                if id != tilde.len() {
                    return Err(malformed(
                        line_no,
                        format!("tilde ids must be consecutive; expected {}", tilde.len()),
                    ));
                }
                let vals: Vec<BigRational> = toks
                    .map(|t| parse_rat(t, line_no))
                    .collect::<Result<_, _>>()?;
                tilde.push(vals);
            }
            Section::Face => {
                let (_, ids) = pending_face
                    .take()
                    .ok_or_else(|| malformed(line_no, "stray expression"))?;
                let toks = tokenize_expr(line);
                let mut pos = 0;
                let expr = parse_expr(&toks, &mut pos, line_no)?;
                if pos != toks.len() {
                    return Err(malformed(line_no, "trailing tokens after expression"));
                }
                faces.push((ids, expr));
            }
        }
    }
    if let Some((l, f)) = pending_face {
        return Err(malformed(l, format!("face {f:?} has no expression")));
    }
    let nvars = nvars.ok_or_else(|| malformed(0, "missing nvars"))?;
    let m = m.ok_or_else(|| malformed(0, "missing m"))?;
    let degrees = degrees.ok_or_else(|| malformed(0, "missing degrees"))?;
    if degrees.len() != m {
        return Err(malformed(0, "degrees count does not match m"));
    }
    if rays.is_empty() {
        return Err(malformed(0, "no vertices"));
    }
    for (i, t) in tilde.iter().enumerate() {
        if t.len() != m {
            return Err(malformed(0, format!("tilde row {i} has wrong arity")));
        }
    }
    if tilde.len() != rays.len() {
        return Err(malformed(0, "tilde rows must cover every vertex"));
    }
    let mut seen = BTreeMap::new();
    for (f, _) in &faces {
        if seen.insert(f.clone(), ()).is_some() {
            return Err(malformed(0, format!("face {f:?} appears twice")));
        }
    }
    Ok(CertificateFile {
        nvars,
        m,
        degrees,
        rays,
        cones,
        tilde,
        faces,
    })
}

fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    v.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

// ---------------------------------------------------------------------------
// the checker

struct FaceData {
    qs: Vec<IntBern>,
    tildes: Vec<IntBern>,
    jac: IntBern,
}

fn replay(
    face: &[VertexId],
    path: &mut String,
    data: &FaceData,
    coface_rows: &[Vec<Vec<BigInt>>],
    m: usize,
    expr: &CertExpr,
    leaves: &mut usize,
) -> Result<(), CertError> {
    match expr {
        CertExpr::Split { edge, left, right } => {
            let (i, j) = *edge;
            let k = data.qs[0].vars;
            if i >= k || j >= k || i == j {
                return Err(rejected(face, path, format!("invalid split edge {i}-{j}")));
            }
            let l = FaceData {
                qs: data.qs.iter().map(|q| q.subdivide_edge(i, j).0).collect(),
                tildes: data
                    .tildes
                    .iter()
                    .map(|t| t.subdivide_edge(i, j).0)
                    .collect(),
                jac: data.jac.subdivide_edge(i, j).0,
            };
            path.push('L');
            replay(face, path, &l, coface_rows, m, left, leaves)?;
            path.pop();
            let r = FaceData {
                qs: data.qs.iter().map(|q| q.subdivide_edge(i, j).1).collect(),
                tildes: data
                    .tildes
                    .iter()
                    .map(|t| t.subdivide_edge(i, j).1)
                    .collect(),
                jac: data.jac.subdivide_edge(i, j).1,
            };
            path.push('R');
            replay(face, path, &r, coface_rows, m, right, leaves)?;
            path.pop();
            Ok(())
        }
        CertExpr::Sign { poly, sign } => {
            *leaves += 1;
            if *poly >= m {
                return Err(rejected(
                    face,
                    path,
                    format!("equation {poly} out of range"),
                ));
            }
            let describe = |got: Option<Sign>| match got {
                Some(s) => format!("uniformly {}", s.as_char()),
                None => "mixed or zero".to_string(),
            };
            match data.qs[*poly].strict_sign() {
                Some(s) if s == *sign => {}
                got => {
                    return Err(rejected(
                        face,
                        path,
                        format!(
                            "equation {poly} claimed strictly {} but coefficients are {}",
                            sign.as_char(),
                            describe(got)
                        ),
                    ))
                }
            }
            match data.tildes[*poly].strict_sign() {
                Some(s) if s == *sign => Ok(()),
                got => Err(rejected(
                    face,
                    path,
                    format!(
                        "interpolant of equation {poly} claimed strictly {} but is {}",
                        sign.as_char(),
                        describe(got)
                    ),
                )),
            }
        }
        CertExpr::Sep { witnesses } => {
            *leaves += 1;
            let want = sign_orbits(m);
            let got: Vec<Vec<Sign>> = witnesses.iter().map(|(s, _)| s.clone()).collect();
            if got != want {
                return Err(rejected(
                    face,
                    path,
                    format!(
                        "witness sign patterns {got:?} do not cover the {} canonical patterns",
                        want.len()
                    ),
                ));
            }
            let ambient = data.jac.cols;
            for (sigma, n) in witnesses {
                if n.len() != ambient {
                    return Err(rejected(face, path, "witness has wrong dimension"));
                }
                let n_int = clear_denominators(n);
                if n_int.iter().all(|x| x.is_zero()) {
                    return Err(rejected(face, path, "zero witness direction"));
                }
                // scale-free diagnostic for a failed dot product
                let describe = |row: &[BigInt], dot: &BigInt| -> String {
                    let norm = |v: &[BigInt]| {
                        v.iter()
                            .map(|x| x.to_f64().unwrap_or(f64::INFINITY).abs().powi(2))
                            .sum::<f64>()
                            .sqrt()
                    };
                    let scale = norm(row) * norm(&n_int);
                    format!(
                        "relative dot {:.3e}",
                        dot.to_f64().unwrap_or(f64::NAN) / scale
                    )
                };
                let check_row = |row: &[BigInt]| -> Result<(), String> {
                    let dot: BigInt = row.iter().zip(&n_int).map(|(a, b)| a * b).sum();
                    if dot.is_positive() {
                        Ok(())
                    } else {
                        Err(describe(row, &dot))
                    }
                };
                for idx in 0..data.jac.len() {
                    let e = data.jac.entry(idx);
                    for i in 0..m {
                        let row: Vec<BigInt> = e[i * ambient..(i + 1) * ambient]
                            .iter()
                            .map(|x| x * sigma[i].factor())
                            .collect();
                        if let Err(detail) = check_row(&row) {
                            return Err(rejected(
                                face,
                                path,
                                format!(
                                    "witness for pattern {} fails on gradient generator {idx} of equation {i} ({detail})",
                                    sigma.iter().map(|s| s.as_char()).collect::<String>()
                                ),
                            ));
                        }
                    }
                }
                for (k, rows) in coface_rows.iter().enumerate() {
                    for (i, r) in rows.iter().enumerate() {
                        let row: Vec<BigInt> = r.iter().map(|x| x * sigma[i].factor()).collect();
                        if let Err(detail) = check_row(&row) {
                            return Err(rejected(
                                face,
                                path,
                                format!(
                                    "witness for pattern {} fails on the interpolant gradient of neighbouring cone {k}, equation {i} ({detail})",
                                    sigma.iter().map(|s| s.as_char()).collect::<String>()
                                ),
                            ));
                        }
                    }
                }
            }
            Ok(())
        }
    }
}

/// Exact interpolant gradient rows of one cone, cleared to integers row by
/// row.
pub(crate) fn exact_cone_gradient_rows(
    decomp: &Decomposition,
    tilde: &[Vec<BigRational>],
    cone: ConeId,
) -> Option<Vec<Vec<BigInt>>> {
    let vs = decomp.cone(cone);
    let m = tilde[0].len();
    let a = decomp.rational_columns(vs);
    let b: Vec<Vec<BigRational>> = vs.iter().map(|&v| tilde[v].clone()).collect();
    let x = solve_mat(&a, &b)?;
    Some(
        (0..m)
            .map(|i| {
                let row: Vec<BigRational> = (0..decomp.dim()).map(|r| x[r][i].clone()).collect();
                clear_denominators(&row)
            })
            .collect(),
    )
}

/// Check a parsed certificate against a polynomial system, exactly.
pub fn check_certificate(
    sys: &PolySystem,
    cert: &CertificateFile,
    seed: u64,
) -> Result<CheckReport, CertError> {
    let start = Instant::now();
    let none: Vec<VertexId> = Vec::new();
    if cert.nvars != sys.nvars() || cert.m != sys.m() || cert.degrees != sys.degrees() {
        return Err(rejected(&none, "", "header does not match the system"));
    }
    let decomp = Decomposition::from_parts(cert.nvars, cert.rays.clone(), cert.cones.clone())
        .map_err(|e| rejected(&none, "", format!("fan structure: {e}")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    decomp
        .validate(&mut rng, 32)
        .map_err(|e| rejected(&none, "", format!("fan geometry: {e}")))?;
    // the interpolant data must be exactly the system's values at the rays
    for v in 0..decomp.num_vertices() {
        let ray: Vec<BigRational> = decomp
            .ray(v)
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        for (i, p) in sys.polys().iter().enumerate() {
            let want = p.eval_rat(&ray);
            if cert.tilde[v][i] != want {
                return Err(rejected(
                    &[v],
                    "",
                    format!(
                        "interpolant value of equation {i} at vertex {v} is not the system's value"
                    ),
                ));
            }
        }
    }
    // both directions: every fan face certified, every certified face in the fan
    let fan_faces = decomp.faces();
    let cert_faces: BTreeMap<Vec<VertexId>, &CertExpr> =
        cert.faces.iter().map(|(f, e)| (f.clone(), e)).collect();
    for f in &fan_faces {
        if !cert_faces.contains_key(f) {
            return Err(rejected(f, "", "face of the fan has no certificate"));
        }
    }
    for f in cert_faces.keys() {
        if !fan_faces.contains(f) {
            return Err(rejected(f, "", "certified face is not a face of the fan"));
        }
    }
    let mut grad_cache: HashMap<ConeId, Vec<Vec<BigInt>>> = HashMap::new();
    for c in decomp.cone_ids() {
        match exact_cone_gradient_rows(&decomp, &cert.tilde, c) {
            Some(rows) => {
                grad_cache.insert(c, rows);
            }
            None => {
                return Err(rejected(
                    decomp.cone(c),
                    "",
                    "cone is too degenerate for an interpolant gradient",
                ))
            }
        }
    }
    let mut leaves = 0usize;
    for (face, expr) in &cert.faces {
        let cols = decomp.rational_columns(face);
        let tilde_vals: Vec<Vec<BigRational>> =
            face.iter().map(|&v| cert.tilde[v].clone()).collect();
        let coface_rows: Vec<Vec<Vec<BigInt>>> = decomp
            .cofaces(face)
            .into_iter()
            .map(|c| grad_cache[&c].clone())
            .collect();
        leaves += exact_face_replay(sys, &cols, &tilde_vals, &coface_rows, face, expr)?;
    }
    Ok(CheckReport {
        faces: cert.faces.len(),
        leaves,
        wall: start.elapsed(),
    })
}

/// Replay one face's split tree in exact integer arithmetic against the
/// system itself: every claim in `expr` is rechecked from scratch. The solver
/// runs this on each face before recording a certificate, so nothing a float
/// round-off sneaked past the margin tests can reach a certificate file.
pub(crate) fn exact_face_replay(
    sys: &PolySystem,
    cols: &[Vec<BigRational>],
    tilde_vals: &[Vec<BigRational>],
    coface_rows: &[Vec<Vec<BigInt>>],
    face: &[VertexId],
    expr: &CertExpr,
) -> Result<usize, CertError> {
    let m = sys.m();
    let ambient = sys.nvars();
    let row_degrees: Vec<usize> = sys.degrees().iter().map(|d| d - 1).collect();
    let k1 = face.len();
    let qs: Vec<IntBern> = sys
        .polys()
        .iter()
        .map(|p| {
            let t = substitute_terms(p.terms(), cols);
            IntBern::from_rational(&BernsteinForm::from_terms(&t, k1, p.degree()))
        })
        .collect();
    let tildes: Vec<IntBern> = (0..m)
        .map(|i| {
            let vals: Vec<BigRational> = tilde_vals.iter().map(|row| row[i].clone()).collect();
            IntBern::from_rational(&BernsteinForm::linear_from_vertex_values(vals))
        })
        .collect();
    let grad_rows: Vec<Vec<crate::poly::Terms<BigRational>>> = sys
        .polys()
        .iter()
        .map(|p| {
            gradient_terms(p.terms(), ambient)
                .iter()
                .map(|g| substitute_terms(g, cols))
                .collect()
        })
        .collect();
    let jac = IntBern::from_rational(&matrix_form(&grad_rows, &row_degrees, k1));
    let data = FaceData { qs, tildes, jac };
    let mut path = String::new();
    let mut leaves = 0usize;
    replay(face, &mut path, &data, coface_rows, m, expr, &mut leaves)?;
    Ok(leaves)
}

/// The exact-witness form of an in-memory split tree (float witnesses carry
/// over bit-exactly).
pub(crate) fn expr_of_node(node: &CertNode) -> CertExpr {
    match node {
        CertNode::Split { edge, left, right } => CertExpr::Split {
            edge: *edge,
            left: Box::new(expr_of_node(left)),
            right: Box::new(expr_of_node(right)),
        },
        CertNode::Sign { poly, sign } => CertExpr::Sign {
            poly: *poly,
            sign: *sign,
        },
        CertNode::Sep { witnesses } => CertExpr::Sep {
            witnesses: witnesses
                .iter()
                .map(|(sigma, n)| (sigma.clone(), n.iter().map(|x| f64_to_rat(*x)).collect()))
                .collect(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::driver::{solve, SolveParams};
    use crate::parse::parse_system;

    const LINE_CERT: &str = "\
[header]
nvars 2
m 1
degrees 1
[vertices]
v 0 1 0
v 1 -1 0
v 2 0 1
v 3 0 -1
[cones]
c 0 0 2
c 1 1 2
c 2 0 3
c 3 1 3
[tilde]
t 0 1
t 1 -1
t 2 1
t 3 -1
[face 0]
(sign 0 +)
[face 0 2]
(sign 0 +)
[face 0 3]
(sep (+ 1 1))
[face 1]
(sign 0 -)
[face 1 2]
(sep (+ 1 1))
[face 1 3]
(sign 0 -)
[face 2]
(sign 0 +)
[face 3]
(sign 0 -)
";

    #[test]
    fn hand_written_certificate_checks() {
        let sys = parse_system("x0 + x1\n").unwrap();
        let cert = parse_certificate(LINE_CERT).unwrap();
        let report = check_certificate(&sys, &cert, 7).unwrap();
        assert_eq!(report.faces, 8);
        assert_eq!(report.leaves, 8);
    }

    #[test]
    fn solve_output_round_trips_and_checks() {
        let sys = parse_system("x0^2 + x1^2 - x2^2\n").unwrap();
        let res = solve(&sys, &SolveParams::default());
        let text = format_certificate(&sys, &res);
        let cert = parse_certificate(&text).unwrap();
        let report = check_certificate(&sys, &cert, 7).unwrap();
        assert_eq!(report.faces, 26);
        // serialization is stable
        let again = format_certificate(&sys, &res);
        assert_eq!(text, again);
    }

    #[test]
    fn refined_solve_output_checks() {
        let sys = parse_system(
            "x0^4 + 2 x0^2 x1^2 - 2 x0^2 x2^2 + x1^4 - 2 x1^2 x2^2 + x2^4 + 1/2 x0^3 x1 - 1/2 x0 x1^3\n",
        )
        .unwrap();
        let res = solve(&sys, &SolveParams::default());
        let text = format_certificate(&sys, &res);
        let cert = parse_certificate(&text).unwrap();
        check_certificate(&sys, &cert, 7).unwrap();
    }

    #[test]
    fn sign_flip_is_rejected_with_location() {
        let sys = parse_system("x0 + x1\n").unwrap();
        let bad = LINE_CERT.replacen("[face 0]\n(sign 0 +)", "[face 0]\n(sign 0 -)", 1);
        let cert = parse_certificate(&bad).unwrap();
        match check_certificate(&sys, &cert, 7) {
            Err(CertError::Rejected { face, .. }) => assert_eq!(face, vec![0]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn tilde_tampering_is_rejected() {
        let sys = parse_system("x0 + x1\n").unwrap();
        let bad = LINE_CERT.replacen("t 0 1", "t 0 2", 1);
        let cert = parse_certificate(&bad).unwrap();
        match check_certificate(&sys, &cert, 7) {
            Err(CertError::Rejected { reason, .. }) => {
                assert!(reason.contains("interpolant value"), "{reason}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dropped_face_is_rejected() {
        let sys = parse_system("x0 + x1\n").unwrap();
        let bad = LINE_CERT.replacen("[face 2]\n(sign 0 +)\n", "", 1);
        let cert = parse_certificate(&bad).unwrap();
        match check_certificate(&sys, &cert, 7) {
            Err(CertError::Rejected { face, reason, .. }) => {
                assert_eq!(face, vec![2]);
                assert!(reason.contains("no certificate"), "{reason}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn ray_tampering_is_rejected() {
        let sys = parse_system("x0 + x1\n").unwrap();
        // scaling a ray (and its antipode, to keep the pairing) changes the
        // system's value there: the stored interpolant no longer matches
        let bad = LINE_CERT
            .replacen("v 0 1 0", "v 0 2 0", 1)
            .replacen("v 1 -1 0", "v 1 -2 0", 1);
        let cert = parse_certificate(&bad).unwrap();
        match check_certificate(&sys, &cert, 7) {
            Err(CertError::Rejected { .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn witness_negation_is_rejected() {
        let sys = parse_system("x0 + x1\n").unwrap();
        let bad = LINE_CERT.replacen("(sep (+ 1 1))", "(sep (+ -1 -1))", 1);
        let cert = parse_certificate(&bad).unwrap();
        match check_certificate(&sys, &cert, 7) {
            Err(CertError::Rejected { face, reason, .. }) => {
                assert_eq!(face, vec![0, 3]);
                assert!(reason.contains("fails"), "{reason}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn wrong_system_is_rejected() {
        let sys = parse_system("x0^2 + x1^2\n").unwrap();
        let cert = parse_certificate(LINE_CERT).unwrap();
        match check_certificate(&sys, &cert, 7) {
            Err(CertError::Rejected { reason, .. }) => {
                assert!(reason.contains("header"), "{reason}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn malformed_inputs_are_distinguished() {
        // garbage line
        let bad = LINE_CERT.replacen("v 0 1 0", "vertex zero", 1);
        match parse_certificate(&bad) {
            Err(CertError::Malformed { line: 6, .. }) => {}
            other => panic!("{other:?}"),
        }
        // broken expression
        let bad = LINE_CERT.replacen("(sign 0 +)", "(sign 0", 1);
        assert!(matches!(
            parse_certificate(&bad),
            Err(CertError::Malformed { .. })
        ));
        // non-consecutive vertex ids
        let bad = LINE_CERT.replacen("v 1 -1 0", "v 7 -1 0", 1);
        assert!(matches!(
            parse_certificate(&bad),
            Err(CertError::Malformed { .. })
        ));
        // duplicate face
        let bad = LINE_CERT.replacen("[face 3]", "[face 2]", 1);
        assert!(matches!(
            parse_certificate(&bad),
            Err(CertError::Malformed { .. })
        ));
    }

    #[test]
    fn split_tree_replays_exactly() {
        // force a deeper tree by certifying a needle-ish quartic, then check
        let sys = parse_system(
            "x0^4 + 2 x0^2 x1^2 - 2 x0^2 x2^2 + x1^4 - 2 x1^2 x2^2 + x2^4 + 1/20 x0^3 x1 - 1/20 x0 x1^3\n",
        )
        .unwrap();
        let res = solve(&sys, &SolveParams::default());
        assert!(
            res.stats.max_split_depth > 0,
            "want a tree with real splits"
        );
        let text = format_certificate(&sys, &res);
        let cert = parse_certificate(&text).unwrap();
        check_certificate(&sys, &cert, 13).unwrap();
    }
}
