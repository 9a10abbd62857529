//! JSON input documents: a variety (its simple factors) and named classes.
//!
//! Rationals are strings such as `"-3/4"`; plain JSON integers are also
//! accepted, floats never are. A field entry is a rational (embedded via
//! the center) or a list of coordinates in the power basis of the center's
//! generator. A quaternion entry is a field entry (a scalar) or a list of
//! four field entries, the coordinates on `1, i, j, k`.

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::exactmath::{parse_rational, FieldElement, NumberField, Rational, RationalPolynomial};
use crate::wedderburn::{
    AlbertType, BaseInvolution, ComponentSpec, DivisionAlgebra, DivisionAlgebraKind, DivisionElement,
    SymmetricClass, VarietyContext, WedderburnComponent,
};

/// An error together with the JSON path where it was detected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Located {
    pub path: String,
    pub error: Error,
}

impl std::fmt::Display for Located {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.path.is_empty() {
            write!(f, "{}", self.error)
        } else {
            write!(f, "{}: {}", self.path, self.error)
        }
    }
}

pub type Parsed<T> = std::result::Result<T, Located>;

fn at(path: &str, error: Error) -> Located {
    Located {
        path: path.to_string(),
        error,
    }
}

fn bad(path: &str, msg: impl Into<String>) -> Located {
    at(path, Error::InvalidInput(msg.into()))
}

fn lift<T>(path: &str, r: Result<T>) -> Parsed<T> {
    r.map_err(|e| at(path, e))
}

/// A parsed document: the validated context and the raw class descriptions,
/// which are validated against the context on demand.
#[derive(Debug, Clone)]
pub struct Document {
    pub context: VarietyContext,
    pub classes: Vec<(String, Value)>,
}

pub fn parse_json(text: &str, what: &str) -> Parsed<Value> {
    serde_json::from_str(text).map_err(|e| bad(what, format!("ill-formed JSON: {e}")))
}

pub fn parse_document(doc: &Value) -> Parsed<Document> {
    let root = object(doc, "$")?;
    let variety = field(root, "variety", "$")?;
    let context = parse_variety(variety, "$.variety")?;
    let classes = match root.get("classes") {
        None => Vec::new(),
        Some(v) => object(v, "$.classes")?.iter().map(|(k, v)| (k.clone(), v.clone())).collect(),
    };
    Ok(Document { context, classes })
}

fn object<'a>(v: &'a Value, path: &str) -> Parsed<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| bad(path, "expected an object"))
}

fn array<'a>(v: &'a Value, path: &str) -> Parsed<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(path, "expected an array"))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Parsed<&'a Value> {
    obj.get(key).ok_or_else(|| bad(path, format!("missing field `{key}`")))
}

fn string<'a>(v: &'a Value, path: &str) -> Parsed<&'a str> {
    v.as_str().ok_or_else(|| bad(path, "expected a string"))
}

fn positive_int(v: &Value, path: &str) -> Parsed<u32> {
    v.as_u64()
        .filter(|&n| n >= 1)
        .and_then(|n| u32::try_from(n).ok())
        .ok_or_else(|| bad(path, "expected a positive integer"))
}

pub fn rational(v: &Value, path: &str) -> Parsed<Rational> {
    match v {
        Value::String(s) => lift(path, parse_rational(s)),
        Value::Number(n) if n.is_i64() || n.is_u64() => lift(path, parse_rational(&n.to_string())),
        Value::Number(_) => Err(bad(path, "floating-point numbers are not accepted; write a rational string")),
        _ => Err(bad(path, "expected a rational string")),
    }
}

fn rational_list(v: &Value, path: &str) -> Parsed<Vec<Rational>> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(k, c)| rational(c, &format!("{path}[{k}]")))
        .collect()
}

fn field_entry(z: &NumberField, v: &Value, path: &str) -> Parsed<FieldElement> {
    if let Value::Array(items) = v {
        if items.is_empty() || items.len() > z.degree() {
            return Err(bad(
                path,
                format!("expected 1 to {} coordinates over the center", z.degree()),
            ));
        }
        return Ok(z.element(RationalPolynomial::new(rational_list(v, path)?)));
    }
    Ok(z.from_rational(rational(v, path)?))
}

fn division_entry(alg: &DivisionAlgebra, v: &Value, path: &str) -> Parsed<DivisionElement> {
    if !alg.is_quaternion() {
        return Ok(alg.scalar(field_entry(alg.center(), v, path)?));
    }
    match v {
        Value::Array(items) => {
            if items.len() != 4 {
                return Err(bad(path, "a quaternion entry has 4 coordinates on 1, i, j, k"));
            }
            let coords = items
                .iter()
                .enumerate()
                .map(|(k, c)| field_entry(alg.center(), c, &format!("{path}[{k}]")))
                .collect::<Parsed<Vec<_>>>()?;
            lift(path, alg.element(coords))
        }
        _ => Ok(alg.scalar(field_entry(alg.center(), v, path)?)),
    }
}

fn division_matrix(alg: &DivisionAlgebra, v: &Value, r: usize, path: &str) -> Parsed<Vec<Vec<DivisionElement>>> {
    let rows = array(v, path)?;
    if rows.len() != r {
        return Err(bad(path, format!("expected {r} rows, found {}", rows.len())));
    }
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let rp = format!("{path}[{i}]");
            let cells = array(row, &rp)?;
            if cells.len() != r {
                return Err(bad(&rp, format!("expected {r} entries, found {}", cells.len())));
            }
            cells
                .iter()
                .enumerate()
                .map(|(j, c)| division_entry(alg, c, &format!("{rp}[{j}]")))
                .collect()
        })
        .collect()
}

pub fn parse_variety(v: &Value, path: &str) -> Parsed<VarietyContext> {
    let obj = object(v, path)?;
    let sqrt = match obj.get("sqrt_deg_phi") {
        Some(s) => rational(s, &format!("{path}.sqrt_deg_phi"))?,
        None => Rational::from_integer(1.into()),
    };
    let fp = format!("{path}.factors");
    let factors = array(field(obj, "factors", path)?, &fp)?;
    let components = factors
        .iter()
        .enumerate()
        .map(|(k, f)| parse_factor(f, &format!("{fp}[{k}]")))
        .collect::<Parsed<Vec<_>>>()?;
    lift(path, VarietyContext::new(components, sqrt))
}

fn parse_factor(v: &Value, path: &str) -> Parsed<WedderburnComponent> {
    let obj = object(v, path)?;
    let name = string(field(obj, "name", path)?, &format!("{path}.name"))?.to_string();
    let dim_g = positive_int(field(obj, "g", path)?, &format!("{path}.g"))?;
    let mult_r = positive_int(field(obj, "r", path)?, &format!("{path}.r"))? as usize;

    let ap = format!("{path}.algebra");
    let alg_obj = object(field(obj, "algebra", path)?, &ap)?;
    let center = match alg_obj.get("center_min_poly") {
        None => NumberField::rationals(),
        Some(p) => {
            let pp = format!("{ap}.center_min_poly");
            lift(&pp, NumberField::new(RationalPolynomial::new(rational_list(p, &pp)?)))?
        }
    };
    let kind = match string(field(alg_obj, "kind", &ap)?, &format!("{ap}.kind"))? {
        "field" => DivisionAlgebraKind::Field,
        "quaternion" => {
            let a = field_entry(&center, field(alg_obj, "a", &ap)?, &format!("{ap}.a"))?;
            let b = field_entry(&center, field(alg_obj, "b", &ap)?, &format!("{ap}.b"))?;
            DivisionAlgebraKind::Quaternion { a, b }
        }
        other => return Err(bad(&format!("{ap}.kind"), format!("unknown algebra kind `{other}`"))),
    };
    let algebra = lift(&ap, DivisionAlgebra::new(center, kind))?;

    let tp = format!("{path}.albert_type");
    let albert_type = match string(field(obj, "albert_type", path)?, &tp)? {
        "I" => AlbertType::I,
        "II" => AlbertType::II,
        "III" => AlbertType::III,
        "IV" => AlbertType::IV,
        other => return Err(bad(&tp, format!("unknown Albert type `{other}`"))),
    };

    let ip = format!("{path}.involution");
    let inv = object(field(obj, "involution", path)?, &ip)?;
    let base = match string(field(inv, "base", &ip)?, &format!("{ip}.base"))? {
        "identity" => BaseInvolution::Identity,
        "field_conjugation" => BaseInvolution::FieldConjugation {
            image: field_entry(
                algebra.center(),
                field(inv, "conj_gen_image", &ip)?,
                &format!("{ip}.conj_gen_image"),
            )?,
        },
        "quaternion_standard" => BaseInvolution::QuaternionStandard,
        "quaternion_twisted" => BaseInvolution::QuaternionTwisted {
            s: division_entry(&algebra, field(inv, "s", &ip)?, &format!("{ip}.s"))?,
        },
        other => return Err(bad(&format!("{ip}.base"), format!("unknown base involution `{other}`"))),
    };
    let gram = match inv.get("H") {
        None => None,
        Some(h) => Some(division_matrix(&algebra, h, mult_r, &format!("{ip}.H"))?),
    };
    lift(
        path,
        WedderburnComponent::new(ComponentSpec {
            name,
            dim_g,
            mult_r,
            algebra,
            albert_type,
            base,
            gram,
        }),
    )
}

/// A class description maps every factor name to its `r × r` block.
pub fn parse_class(ctx: &VarietyContext, v: &Value, path: &str) -> Parsed<SymmetricClass> {
    let obj = object(v, path)?;
    for key in obj.keys() {
        if ctx.component(key).is_none() {
            return Err(bad(path, format!("no factor named `{key}`")));
        }
    }
    let blocks = ctx
        .components()
        .iter()
        .map(|comp| {
            let bp = format!("{path}.{}", comp.name());
            let rows = division_matrix(comp.algebra(), field(obj, comp.name(), path)?, comp.mult_r(), &bp)?;
            lift(&bp, comp.element(rows))
        })
        .collect::<Parsed<Vec<_>>>()?;
    lift(path, ctx.class(blocks))
}

/// The classes of a separate class file: either `{"classes": {...}}` or a
/// single class description.
pub fn class_file_entries(v: &Value, default_name: &str) -> Parsed<Vec<(String, Value)>> {
    let obj = object(v, "$")?;
    match obj.get("classes") {
        Some(c) => Ok(object(c, "$.classes")?.iter().map(|(k, v)| (k.clone(), v.clone())).collect()),
        None => Ok(vec![(default_name.to_string(), v.clone())]),
    }
}
