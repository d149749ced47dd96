//! Framed binary coefficient cache with an integrity hash.
//!
//! Layout: magic "CMMQ" | version u32 LE | order u64 LE | per coefficient a
//! sign byte (0 zero, 1 positive, 0xFF negative) and a u32 LE length followed
//! by the magnitude in big-endian bytes | sha256 of everything preceding.
//! Readers verify magic, version, hash, and canonical encoding (zero has
//! empty magnitude, nonzero has no leading zero byte).

use std::path::Path;

use num_bigint::{BigInt, Sign};
use num_traits::Zero;
use sha2::{Digest, Sha256};

use crate::series::QSeries;

const MAGIC: &[u8; 4] = b"CMMQ";
const VERSION: u32 = 1;

#[derive(thiserror::Error, Debug)]
pub enum CacheError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("not a coefficient cache (bad magic)")]
    BadMagic,
    #[error("unsupported cache version {0}")]
    BadVersion(u32),
    #[error("corrupt cache payload: {0}")]
    Corrupt(&'static str),
    #[error("integrity hash mismatch")]
    HashMismatch,
}

pub fn write_cache(path: &Path, s: &QSeries) -> Result<(), CacheError> {
    let mut buf = Vec::with_capacity(16 + 8 * (s.order() + 1));
    buf.extend_from_slice(MAGIC);
    buf.extend_from_slice(&VERSION.to_le_bytes());
    buf.extend_from_slice(&(s.order() as u64).to_le_bytes());
    for c in s.coeffs() {
        let (sign, mag) = c.to_bytes_be();
        let sign_byte: u8 = match sign {
            Sign::NoSign => 0,
            Sign::Plus => 1,
            Sign::Minus => 0xFF,
        };
        buf.push(sign_byte);
        let mag: &[u8] = if sign == Sign::NoSign { &[] } else { &mag };
        buf.extend_from_slice(&(mag.len() as u32).to_le_bytes());
        buf.extend_from_slice(mag);
    }
    let hash = Sha256::digest(&buf);
    buf.extend_from_slice(&hash);
    std::fs::write(path, buf)?;
    Ok(())
}

pub fn read_cache(path: &Path) -> Result<QSeries, CacheError> {
    let data = std::fs::read(path)?;
    if data.len() < 4 + 4 + 8 + 32 {
        return Err(CacheError::Corrupt("file too short"));
    }
    let (body, hash) = data.split_at(data.len() - 32);
    if Sha256::digest(body).as_slice() != hash {
        return Err(CacheError::HashMismatch);
    }
    if &body[0..4] != MAGIC {
        return Err(CacheError::BadMagic);
    }
    let version = u32::from_le_bytes(body[4..8].try_into().unwrap());
    if version != VERSION {
        return Err(CacheError::BadVersion(version));
    }
    let order = u64::from_le_bytes(body[8..16].try_into().unwrap());
    let order = usize::try_from(order).map_err(|_| CacheError::Corrupt("order too large"))?;
    let mut pos = 16usize;
    let mut coeffs = Vec::with_capacity(order + 1);
    for _ in 0..=order {
        if pos + 5 > body.len() {
            return Err(CacheError::Corrupt("truncated coefficient frame"));
        }
        let sign_byte = body[pos];
        let len = u32::from_le_bytes(body[pos + 1..pos + 5].try_into().unwrap()) as usize;
        pos += 5;
        if pos + len > body.len() {
            return Err(CacheError::Corrupt("magnitude runs past end"));
        }
        let mag = &body[pos..pos + len];
        pos += len;
        let c = match sign_byte {
            0 => {
                if len != 0 {
                    return Err(CacheError::Corrupt("zero with nonempty magnitude"));
                }
                BigInt::zero()
            }
            1 | 0xFF => {
                if len == 0 || mag[0] == 0 {
                    return Err(CacheError::Corrupt("non-canonical magnitude"));
                }
                let sign = if sign_byte == 1 { Sign::Plus } else { Sign::Minus };
                BigInt::from_bytes_be(sign, mag)
            }
            _ => return Err(CacheError::Corrupt("invalid sign byte")),
        };
        coeffs.push(c);
    }
    if pos != body.len() {
        return Err(CacheError::Corrupt("trailing bytes after coefficients"));
    }
    Ok(QSeries::from_coeffs(coeffs))
}
