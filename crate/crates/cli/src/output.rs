//! Table serialization: CSV with a fixed column schema, or a JSON array
//! of row objects with the same field names. All floats carry 12
//! significant digits so output is deterministic and round-trips.

use std::io::Write;

use serde::Serialize;

/// 12 significant digits.
pub fn fmt(x: f64) -> String {
    format!("{x:.11e}")
}

#[derive(Serialize)]
pub struct EnergyRow {
    pub nu: f64,
    pub epsilon: f64,
    pub oracle: Option<f64>,
    pub delta: Option<f64>,
}

#[derive(Serialize)]
pub struct WavefunctionRow {
    pub x_over_l: f64,
    pub psi_trial: f64,
    pub psi_oracle: Option<f64>,
}

fn opt(x: Option<f64>) -> String {
    x.map(fmt).unwrap_or_default()
}

pub fn energy_csv(w: &mut dyn Write, rows: &[EnergyRow]) -> std::io::Result<()> {
    writeln!(w, "nu,epsilon,oracle,delta")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{}",
            fmt(r.nu),
            fmt(r.epsilon),
            opt(r.oracle),
            opt(r.delta)
        )?;
    }
    Ok(())
}

pub fn wavefunction_csv(
    w: &mut dyn Write,
    header_comments: &[String],
    rows: &[WavefunctionRow],
) -> std::io::Result<()> {
    for c in header_comments {
        writeln!(w, "# {c}")?;
    }
    writeln!(w, "x_over_L,psi_trial,psi_oracle")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{}",
            fmt(r.x_over_l),
            fmt(r.psi_trial),
            opt(r.psi_oracle)
        )?;
    }
    Ok(())
}

/// JSON array with the same field names as the CSV columns. Floats are
/// emitted from their 12-digit decimal form so the two formats agree
/// exactly.
pub fn json_array<T: Serialize>(w: &mut dyn Write, rows: &[T]) -> std::io::Result<()> {
    let value = serde_json::to_value(rows).expect("row serialization cannot fail");
    let rendered = round_floats(value);
    writeln!(w, "{}", serde_json::to_string_pretty(&rendered)?)
}

fn round_floats(v: serde_json::Value) -> serde_json::Value {
    use serde_json::Value;
    match v {
        Value::Number(n) => match n.as_f64() {
            Some(x) if n.is_f64() => {
                let parsed: f64 = fmt(x).parse().expect("formatted float parses");
                Value::Number(serde_json::Number::from_f64(parsed).expect("finite"))
            }
            _ => Value::Number(n),
        },
        Value::Array(items) => Value::Array(items.into_iter().map(round_floats).collect()),
        Value::Object(map) => {
            Value::Object(map.into_iter().map(|(k, x)| (k, round_floats(x))).collect())
        }
        other => other,
    }
}
