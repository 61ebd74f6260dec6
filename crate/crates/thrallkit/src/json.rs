//! JSON encodings of the core types.
//!
//! Rationals are strings (`"-1/6"`, `"2"`); integers are also accepted on
//! input, floats are not. Words are digit strings, so letters stop at 9.
//! Objects use `serde_json`'s sorted maps, which keeps output byte-stable.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};
use thrallkit_core::free_lie::LieElement;
use thrallkit_core::rank_variety::{FlsReport, HdetReport, RankOneReport};
use thrallkit_core::{
    GroupAlgebraElement, Partition, Permutation, PiecewiseLinearPath, Scalar, Tensor, TensorSeries,
    Word, WordFunctional,
};

use crate::error::{AppError, AppResult};

pub fn scalar(x: &Scalar) -> Value {
    Value::String(x.to_string())
}

pub fn partition(p: &Partition) -> Value {
    json!(p.parts())
}

fn word_key(w: &Word) -> String {
    w.to_string()
}

pub fn tensor_entries(t: &Tensor) -> Value {
    let map: Map<String, Value> = t.terms().map(|(w, c)| (word_key(&w), scalar(c))).collect();
    Value::Object(map)
}

pub fn tensor(t: &Tensor) -> Value {
    json!({ "dim": t.dim(), "order": t.order(), "entries": tensor_entries(t) })
}

pub fn series(s: &TensorSeries) -> Value {
    let levels: Vec<Value> = s.levels().iter().map(tensor_entries).collect();
    json!({ "dim": s.dim(), "k_max": s.k_max(), "levels": levels })
}

pub fn functional(f: &WordFunctional) -> Value {
    let map: Map<String, Value> = f.terms().iter().map(|(w, c)| (word_key(w), scalar(c))).collect();
    Value::Object(map)
}

pub fn graded_functional(f: &WordFunctional, grading: &Partition) -> Value {
    json!({ "terms": functional(f), "grading": partition(grading) })
}

pub fn permutation(p: &Permutation) -> Value {
    json!({ "cycles": p.to_string(), "images": p.one_line() })
}

pub fn group_algebra(x: &GroupAlgebraElement) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(p, c)| json!({ "permutation": p.to_string(), "images": p.one_line(), "coefficient": scalar(c) }))
        .collect();
    json!({ "degree": x.degree(), "terms": terms })
}

pub fn lie_element(l: &LieElement) -> Value {
    let map: Map<String, Value> = l.coeffs().iter().map(|(w, c)| (word_key(w), scalar(c))).collect();
    json!({ "dim": l.dim(), "k_max": l.k_max(), "lyndon_coordinates": map })
}

pub fn rank_one_report(r: &RankOneReport, factors: Option<&[Vec<Scalar>]>) -> Value {
    let factors = factors.map(|fs| {
        fs.iter().map(|v| v.iter().map(scalar).collect::<Vec<_>>()).collect::<Vec<_>>()
    });
    json!({
        "symmetric": r.symmetric,
        "rank_one": r.rank_one,
        "asserted_in_u": r.asserted_in_u,
        "agree": r.agree,
        "factors": factors,
    })
}

pub fn fls_report(r: &FlsReport) -> Value {
    json!({
        "criterion_a": r.criterion_a,
        "criterion_b": r.criterion_b,
        "criterion_c": r.criterion_c,
        "witness": { "agree": r.agree(), "first_failure": r.first_failure },
    })
}

pub fn hdet_report(r: &HdetReport) -> Value {
    json!({
        "passed": r.passed,
        "constant": r.constant.as_ref().map(scalar),
        "samples": r.samples,
        "counterexample": r.counterexample,
    })
}

// Parsing. Every error names the offending field.

pub fn parse_document(text: &str) -> AppResult<Value> {
    serde_json::from_str(text).map_err(|e| AppError::input("<document>", e.to_string()))
}

fn get<'a>(v: &'a Value, field: &str, path: &str) -> AppResult<&'a Value> {
    v.get(field).ok_or_else(|| AppError::input(join(path, field), "missing"))
}

fn join(path: &str, field: &str) -> String {
    if path.is_empty() {
        field.to_string()
    } else {
        format!("{}.{}", path, field)
    }
}

fn parse_usize(v: &Value, path: &str) -> AppResult<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| AppError::input(path, "expected a nonnegative integer"))
}

pub fn parse_scalar(v: &Value, path: &str) -> AppResult<Scalar> {
    match v {
        Value::String(s) => s
            .trim()
            .parse::<Scalar>()
            .map_err(|_| AppError::input(path, format!("{:?} is not a rational \"p/q\"", s))),
        Value::Number(n) => n
            .as_i64()
            .map(|i| Scalar::from_integer(i.into()))
            .ok_or_else(|| AppError::input(path, "numbers must be integers; write rationals as \"p/q\"")),
        _ => Err(AppError::input(path, "expected a rational string or an integer")),
    }
}

fn parse_word(s: &str, dim: usize, path: &str) -> AppResult<Word> {
    let w: Word = s.parse().map_err(|e: thrallkit_core::Error| AppError::input(path, e.to_string()))?;
    if let Some(&l) = w.letters().iter().find(|&&l| l as usize > dim) {
        return Err(AppError::input(path, format!("letter {} exceeds dim {}", l, dim)));
    }
    Ok(w)
}

fn parse_entries(v: &Value, dim: usize, order: Option<usize>, path: &str) -> AppResult<Vec<(Word, Scalar)>> {
    let map = v.as_object().ok_or_else(|| AppError::input(path, "expected an object of word: rational"))?;
    let mut out = Vec::with_capacity(map.len());
    for (key, value) in map {
        let field = format!("{}.\"{}\"", path, key);
        let w = parse_word(key, dim, &field)?;
        if let Some(k) = order {
            if w.len() != k {
                return Err(AppError::input(field, format!("word length {} differs from order {}", w.len(), k)));
            }
        }
        out.push((w, parse_scalar(value, &field)?));
    }
    Ok(out)
}

fn tensor_from_entries(dim: usize, order: usize, entries: Vec<(Word, Scalar)>) -> Tensor {
    let mut t = Tensor::zeros(dim, order);
    for (w, c) in entries {
        t.set(&w, c);
    }
    t
}

/// `{"dim": d, "order": k, "entries": {"12": "1/2", ...}}`.
pub fn parse_tensor(v: &Value) -> AppResult<Tensor> {
    let dim = parse_usize(get(v, "dim", "")?, "dim")?;
    if dim == 0 || dim > 9 {
        return Err(AppError::input("dim", "must be between 1 and 9"));
    }
    let order = parse_usize(get(v, "order", "")?, "order")?;
    let entries = parse_entries(get(v, "entries", "")?, dim, Some(order), "entries")?;
    Ok(tensor_from_entries(dim, order, entries))
}

/// `{"dim": d, "k_max": m, "levels": [{"": "1"}, {"1": "1"}, ...]}`.
pub fn parse_series(v: &Value) -> AppResult<TensorSeries> {
    let dim = parse_usize(get(v, "dim", "")?, "dim")?;
    if dim == 0 || dim > 9 {
        return Err(AppError::input("dim", "must be between 1 and 9"));
    }
    let levels = get(v, "levels", "")?
        .as_array()
        .ok_or_else(|| AppError::input("levels", "expected an array"))?;
    if let Some(k_max) = v.get("k_max") {
        let k_max = parse_usize(k_max, "k_max")?;
        if k_max + 1 != levels.len() {
            return Err(AppError::input("levels", format!("expected {} levels for k_max {}", k_max + 1, k_max)));
        }
    }
    if levels.is_empty() {
        return Err(AppError::input("levels", "at least level 0 is required"));
    }
    let mut tensors = Vec::with_capacity(levels.len());
    for (i, level) in levels.iter().enumerate() {
        let path = format!("levels[{}]", i);
        tensors.push(tensor_from_entries(dim, i, parse_entries(level, dim, Some(i), &path)?));
    }
    Ok(TensorSeries::from_levels(dim, tensors)?)
}

/// A document holding either a tensor or a series.
pub enum TensorInput {
    Tensor(Tensor),
    Series(TensorSeries),
}

pub fn parse_tensor_or_series(v: &Value) -> AppResult<TensorInput> {
    if v.get("levels").is_some() {
        Ok(TensorInput::Series(parse_series(v)?))
    } else {
        Ok(TensorInput::Tensor(parse_tensor(v)?))
    }
}

/// `{"points": [["0","0"], [1, 0], ...]}`.
pub fn parse_path(v: &Value) -> AppResult<PiecewiseLinearPath> {
    let points = get(v, "points", "")?
        .as_array()
        .ok_or_else(|| AppError::input("points", "expected an array of points"))?;
    if points.is_empty() {
        return Err(AppError::input("points", "a path needs at least one point"));
    }
    let mut out = Vec::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        let path = format!("points[{}]", i);
        let coords = p.as_array().ok_or_else(|| AppError::input(&path, "expected an array of coordinates"))?;
        let coords = coords
            .iter()
            .enumerate()
            .map(|(j, c)| parse_scalar(c, &format!("{}[{}]", path, j)))
            .collect::<AppResult<Vec<_>>>()?;
        if let Some(first) = out.first() {
            let first: &Vec<Scalar> = first;
            if first.len() != coords.len() {
                return Err(AppError::input(path, format!("expected {} coordinates", first.len())));
            }
        }
        out.push(coords);
    }
    Ok(PiecewiseLinearPath::new(out)?)
}

pub fn parse_group_algebra(v: &Value) -> AppResult<GroupAlgebraElement> {
    let degree = parse_usize(get(v, "degree", "")?, "degree")?;
    let terms = get(v, "terms", "")?.as_array().ok_or_else(|| AppError::input("terms", "expected an array"))?;
    let mut parsed = BTreeMap::new();
    for (i, term) in terms.iter().enumerate() {
        let path = format!("terms[{}]", i);
        let images = get(term, "images", &path)?
            .as_array()
            .ok_or_else(|| AppError::input(join(&path, "images"), "expected an array"))?
            .iter()
            .map(|x| parse_usize(x, &join(&path, "images")))
            .collect::<AppResult<Vec<_>>>()?;
        let p = Permutation::from_images(&images).map_err(|e| AppError::input(join(&path, "images"), e.to_string()))?;
        let c = parse_scalar(get(term, "coefficient", &path)?, &join(&path, "coefficient"))?;
        parsed.insert(p, c);
    }
    Ok(GroupAlgebraElement::from_terms(degree, parsed)?)
}

/// Pretty JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}
