//! Field files.
//!
//! Binary layout, all little-endian:
//!
//! | bytes      | content                         |
//! |------------|---------------------------------|
//! | 4          | magic `NSGF`                    |
//! | 4          | version, `u32`                  |
//! | 4          | dimension `d`, `u32`            |
//! | 4·d        | extents, `u32` each             |
//! | 8          | spacing `h`, `f64`              |
//! | 8·d        | origin, `f64` each              |
//! | 8·N        | samples, `f64`, row-major       |

use std::io::{Read, Write};

use super::{ScalarField, UniformGrid};
use crate::error::{Error, Result};
use crate::kernels::Dimension;

pub const FILE_MAGIC: &[u8; 4] = b"NSGF";
pub const FILE_VERSION: u32 = 1;

pub fn write_binary(field: &ScalarField, mut out: impl Write) -> Result<()> {
    let grid = field.grid();
    let mut buf = Vec::with_capacity(48 + 8 * field.values().len());
    buf.extend_from_slice(FILE_MAGIC);
    buf.extend_from_slice(&FILE_VERSION.to_le_bytes());
    buf.extend_from_slice(&(grid.dim().get() as u32).to_le_bytes());
    for &n in grid.extents() {
        let n = u32::try_from(n).map_err(|_| Error::Format(format!("extent {n} exceeds u32")))?;
        buf.extend_from_slice(&n.to_le_bytes());
    }
    buf.extend_from_slice(&grid.spacing().to_le_bytes());
    for &x in grid.origin() {
        buf.extend_from_slice(&x.to_le_bytes());
    }
    for &v in field.values() {
        buf.extend_from_slice(&v.to_le_bytes());
    }
    out.write_all(&buf)?;
    Ok(())
}

struct Cursor<'a>(&'a [u8]);

impl Cursor<'_> {
    fn take<const N: usize>(&mut self, what: &str) -> Result<[u8; N]> {
        if self.0.len() < N {
            return Err(Error::Format(format!("file truncated while reading {what}")));
        }
        let (head, rest) = self.0.split_at(N);
        self.0 = rest;
        Ok(head.try_into().expect("split length"))
    }

    fn u32(&mut self, what: &str) -> Result<u32> {
        self.take::<4>(what).map(u32::from_le_bytes)
    }

    fn f64(&mut self, what: &str) -> Result<f64> {
        self.take::<8>(what).map(f64::from_le_bytes)
    }
}

pub fn read_binary(mut input: impl Read) -> Result<ScalarField> {
    let mut bytes = Vec::new();
    input.read_to_end(&mut bytes)?;
    let mut cur = Cursor(&bytes);
    if &cur.take::<4>("magic")? != FILE_MAGIC {
        return Err(Error::Format("not a field file (bad magic)".into()));
    }
    let version = cur.u32("version")?;
    if version != FILE_VERSION {
        return Err(Error::Format(format!("unsupported version {version}")));
    }
    let d = cur.u32("dimension")? as usize;
    let dim = Dimension::new(d).map_err(|e| Error::Format(e.to_string()))?;
    let extents = (0..d).map(|_| cur.u32("extents").map(|n| n as usize)).collect::<Result<Vec<_>>>()?;
    let h = cur.f64("spacing")?;
    let origin = (0..d).map(|_| cur.f64("origin")).collect::<Result<Vec<_>>>()?;
    let grid = UniformGrid::new(dim, &extents, h, &origin).map_err(|e| Error::Format(e.to_string()))?;
    if cur.0.len() != 8 * grid.len() {
        return Err(Error::Format(format!(
            "expected {} sample bytes, found {}",
            8 * grid.len(),
            cur.0.len()
        )));
    }
    let values = cur.0.chunks_exact(8).map(|c| f64::from_le_bytes(c.try_into().expect("chunk"))).collect();
    ScalarField::new(grid, values)
}

/// One row per sample: integer indices, positions, then the value.
pub fn write_csv(field: &ScalarField, mut out: impl Write) -> Result<()> {
    let grid = field.grid();
    let d = grid.dim().get();
    let mut text = String::new();
    let head: Vec<String> = (0..d)
        .map(|a| format!("i{a}"))
        .chain((0..d).map(|a| format!("x{a}")))
        .chain(["value".to_string()])
        .collect();
    text.push_str(&head.join(","));
    text.push('\n');
    for (flat, v) in field.values().iter().enumerate() {
        let index = grid.multi_index(flat);
        for i in &index {
            text.push_str(&format!("{i},"));
        }
        for x in grid.position(&index) {
            text.push_str(&format!("{x:e},"));
        }
        text.push_str(&format!("{v:e}\n"));
    }
    out.write_all(text.as_bytes())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field() -> ScalarField {
        let g = UniformGrid::new(Dimension::Two, &[4, 5], 0.125, &[-1.0, 0.5]).unwrap();
        ScalarField::sample(g, |x| x[0] * 3.0 - x[1].sin()).unwrap()
    }

    #[test]
    fn binary_round_trip_is_exact() {
        let f = field();
        let mut buf = Vec::new();
        write_binary(&f, &mut buf).unwrap();
        assert_eq!(buf.len(), 4 + 4 + 4 + 8 + 8 + 16 + 8 * 20);
        assert_eq!(&buf[..4], b"NSGF");
        assert_eq!(read_binary(buf.as_slice()).unwrap(), f);
    }

    #[test]
    fn binary_rejects_damage() {
        let mut buf = Vec::new();
        write_binary(&field(), &mut buf).unwrap();
        assert!(matches!(read_binary(&buf[..buf.len() - 1]), Err(Error::Format(_))));
        let mut extra = buf.clone();
        extra.push(0);
        assert!(read_binary(extra.as_slice()).is_err());
        let mut bad = buf.clone();
        bad[0] = b'X';
        assert!(read_binary(bad.as_slice()).is_err());
        let mut version = buf;
        version[4] = 9;
        assert!(read_binary(version.as_slice()).is_err());
    }

    #[test]
    fn csv_rows() {
        let mut buf = Vec::new();
        write_csv(&field(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 21);
        assert_eq!(lines[0], "i0,i1,x0,x1,value");
        assert!(lines[2].starts_with("0,1,-1e0,6.25e-1,"));
    }
}
