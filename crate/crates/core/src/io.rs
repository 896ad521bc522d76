//! Image file codecs: binary PGM (P5) read/write and PNG read/write.
//!
//! The input format is sniffed from the file's magic bytes; the output
//! format is chosen by extension (`.pgm` or `.png`, case-insensitive).
//! 8-bit samples map to `v / 255`, 16-bit samples to `v / 65535`, and
//! colour PNGs are reduced to Rec. 601 luma.

use std::fs;
use std::io::{Cursor, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::image::{quantize_u8, ImageBuffer};

const PNG_SIGNATURE: [u8; 8] = [0x89, b'P', b'N', b'G', 0x0D, 0x0A, 0x1A, 0x0A];

const LUMA_R: f64 = 0.299;
const LUMA_G: f64 = 0.587;
const LUMA_B: f64 = 0.114;

pub fn load_image(path: impl AsRef<Path>) -> Result<ImageBuffer> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => Error::MissingFile(path.to_path_buf()),
        _ => Error::Io {
            path: path.to_path_buf(),
            source: e,
        },
    })?;
    decode(&bytes)
}

/// Decodes an in-memory PGM or PNG file.
pub fn decode(bytes: &[u8]) -> Result<ImageBuffer> {
    if bytes.starts_with(b"P5") {
        decode_pgm(bytes)
    } else if bytes.starts_with(&PNG_SIGNATURE) {
        decode_png(bytes)
    } else if bytes.len() >= 2 && bytes[0] == b'P' && bytes[1].is_ascii_digit() {
        Err(Error::UnsupportedFormat(format!(
            "netpbm variant P{} (only binary P5 is supported)",
            bytes[1] as char
        )))
    } else {
        Err(Error::UnsupportedFormat(
            "not a binary PGM or PNG file".into(),
        ))
    }
}

pub fn save_image(img: &ImageBuffer, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase);
    let bytes = match ext.as_deref() {
        Some("pgm") => encode_pgm(img),
        Some("png") => encode_png(img)?,
        _ => return Err(Error::UnknownExtension(path.to_path_buf())),
    };
    fs::write(path, bytes).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Binary PGM with maxval 255.
pub fn encode_pgm(img: &ImageBuffer) -> Vec<u8> {
    let header = format!("P5\n{} {}\n255\n", img.width(), img.height());
    let mut out = Vec::with_capacity(header.len() + img.len());
    out.extend_from_slice(header.as_bytes());
    out.extend(img.pixels().iter().map(|&v| quantize_u8(v)));
    out
}

/// 8-bit grayscale PNG.
pub fn encode_png(img: &ImageBuffer) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    {
        let width = u32::try_from(img.width())
            .map_err(|_| Error::invalid("width", "too large for PNG"))?;
        let height = u32::try_from(img.height())
            .map_err(|_| Error::invalid("height", "too large for PNG"))?;
        let mut encoder = png::Encoder::new(&mut out, width, height);
        encoder.set_color(png::ColorType::Grayscale);
        encoder.set_depth(png::BitDepth::Eight);
        let data: Vec<u8> = img.pixels().iter().map(|&v| quantize_u8(v)).collect();
        let mut writer = encoder
            .write_header()
            .map_err(|e| Error::CorruptData(format!("png encode: {e}")))?;
        writer
            .write_image_data(&data)
            .map_err(|e| Error::CorruptData(format!("png encode: {e}")))?;
        writer
            .finish()
            .map_err(|e| Error::CorruptData(format!("png encode: {e}")))?;
    }
    out.flush().ok();
    Ok(out)
}

struct PgmHeader {
    width: usize,
    height: usize,
    maxval: u32,
    data_offset: usize,
}

fn parse_pgm_header(bytes: &[u8]) -> Result<PgmHeader> {
    let mut pos = 2;
    let mut fields = [0u64; 3];
    for (slot, name) in fields.iter_mut().zip(["width", "height", "maxval"]) {
        // whitespace and comments between tokens
        loop {
            match bytes.get(pos) {
                Some(b) if b.is_ascii_whitespace() => pos += 1,
                Some(b'#') => {
                    while let Some(&b) = bytes.get(pos) {
                        pos += 1;
                        if b == b'\n' || b == b'\r' {
                            break;
                        }
                    }
                }
                _ => break,
            }
        }
        let start = pos;
        while bytes.get(pos).is_some_and(u8::is_ascii_digit) {
            pos += 1;
        }
        if start == pos {
            return Err(Error::CorruptHeader(format!("missing {name}")));
        }
        let text = std::str::from_utf8(&bytes[start..pos]).expect("ascii digits");
        *slot = text
            .parse()
            .map_err(|_| Error::CorruptHeader(format!("{name} out of range")))?;
    }
    match bytes.get(pos) {
        Some(b) if b.is_ascii_whitespace() => pos += 1,
        _ => {
            return Err(Error::CorruptHeader(
                "expected whitespace after maxval".into(),
            ))
        }
    }
    let [width, height, maxval] = fields;
    if width == 0 || height == 0 {
        return Err(Error::CorruptHeader("zero width or height".into()));
    }
    if maxval == 0 || maxval > 65535 {
        return Err(Error::CorruptHeader(format!("maxval {maxval} not in 1..=65535")));
    }
    let width = usize::try_from(width).map_err(|_| Error::CorruptHeader("width too large".into()))?;
    let height =
        usize::try_from(height).map_err(|_| Error::CorruptHeader("height too large".into()))?;
    Ok(PgmHeader {
        width,
        height,
        maxval: maxval as u32,
        data_offset: pos,
    })
}

fn decode_pgm(bytes: &[u8]) -> Result<ImageBuffer> {
    let header = parse_pgm_header(bytes)?;
    let count = header
        .width
        .checked_mul(header.height)
        .ok_or_else(|| Error::CorruptHeader("image too large".into()))?;
    let bytes_per_sample = if header.maxval > 255 { 2 } else { 1 };
    let data = &bytes[header.data_offset..];
    if data.len() < count * bytes_per_sample {
        return Err(Error::CorruptData(format!(
            "expected {} sample bytes, found {}",
            count * bytes_per_sample,
            data.len()
        )));
    }
    let scale = f64::from(header.maxval);
    let pixels: Vec<f64> = if bytes_per_sample == 1 {
        data[..count].iter().map(|&b| f64::from(b) / scale).collect()
    } else {
        data[..count * 2]
            .chunks_exact(2)
            .map(|c| f64::from(u16::from_be_bytes([c[0], c[1]])) / scale)
            .collect()
    };
    if pixels.iter().any(|&v| v > 1.0) {
        return Err(Error::CorruptData("sample exceeds maxval".into()));
    }
    ImageBuffer::new(header.height, header.width, pixels)
}

fn decode_png(bytes: &[u8]) -> Result<ImageBuffer> {
    let png_err = |e: png::DecodingError| match e {
        png::DecodingError::Format(f) => Error::CorruptHeader(format!("png: {f}")),
        other => Error::CorruptData(format!("png: {other}")),
    };
    let mut decoder = png::Decoder::new(Cursor::new(bytes));
    // palette -> rgb, sub-byte gray -> 8 bit, tRNS -> alpha
    decoder.set_transformations(png::Transformations::EXPAND);
    let mut reader = decoder.read_info().map_err(png_err)?;
    let size = reader
        .output_buffer_size()
        .ok_or_else(|| Error::CorruptHeader("png: image too large".into()))?;
    let mut buf = vec![0u8; size];
    let info = reader.next_frame(&mut buf).map_err(png_err)?;

    let channels = match info.color_type {
        png::ColorType::Grayscale => 1,
        png::ColorType::GrayscaleAlpha => 2,
        png::ColorType::Rgb => 3,
        png::ColorType::Rgba => 4,
        png::ColorType::Indexed => {
            return Err(Error::UnsupportedFormat("unexpanded indexed png".into()))
        }
    };
    let (bytes_per_sample, scale) = match info.bit_depth {
        png::BitDepth::Eight => (1usize, 255.0),
        png::BitDepth::Sixteen => (2usize, 65535.0),
        other => {
            return Err(Error::UnsupportedFormat(format!(
                "png bit depth {other:?}"
            )))
        }
    };
    let width = info.width as usize;
    let height = info.height as usize;
    let sample = |row: &[u8], idx: usize| -> f64 {
        let v = if bytes_per_sample == 1 {
            u16::from(row[idx])
        } else {
            u16::from_be_bytes([row[2 * idx], row[2 * idx + 1]])
        };
        f64::from(v) / scale
    };
    let mut pixels = Vec::with_capacity(width * height);
    for row in buf.chunks(info.line_size).take(height) {
        for x in 0..width {
            let base = x * channels;
            let v = if channels >= 3 {
                LUMA_R * sample(row, base) + LUMA_G * sample(row, base + 1) + LUMA_B * sample(row, base + 2)
            } else {
                sample(row, base)
            };
            pixels.push(v);
        }
    }
    ImageBuffer::from_clamped(height, width, pixels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pgm(width: usize, height: usize, data: &[u8]) -> Vec<u8> {
        let mut out = format!("P5\n{width} {height}\n255\n").into_bytes();
        out.extend_from_slice(data);
        out
    }

    #[test]
    fn decodes_8bit_pgm_linearly() {
        let img = decode(&pgm(2, 2, &[0, 255, 128, 64])).unwrap();
        assert_eq!(img.dims(), (2, 2));
        assert_eq!(img.pixels(), &[0.0, 1.0, 128.0 / 255.0, 64.0 / 255.0]);
    }

    #[test]
    fn decodes_all_zero_pgm() {
        let img = decode(&pgm(3, 2, &[0; 6])).unwrap();
        assert!(img.pixels().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn header_comments_are_skipped() {
        let bytes = b"P5 # made by hand\n3 # width\n1\n255\n\x00\x01\x02".to_vec();
        let img = decode(&bytes).unwrap();
        assert_eq!(img.dims(), (1, 3));
        assert_eq!(img.get(0, 2), 2.0 / 255.0);
    }

    #[test]
    fn decodes_16bit_pgm() {
        let mut bytes = b"P5\n2 1\n65535\n".to_vec();
        bytes.extend_from_slice(&[0xFF, 0xFF, 0x80, 0x00]);
        let img = decode(&bytes).unwrap();
        assert_eq!(img.pixels(), &[1.0, 32768.0 / 65535.0]);
    }

    #[test]
    fn distinct_errors() {
        assert!(matches!(
            decode(b"P2\n1 1\n255\n0"),
            Err(Error::UnsupportedFormat(_))
        ));
        assert!(matches!(decode(b"GIF89a"), Err(Error::UnsupportedFormat(_))));
        assert!(matches!(decode(b"P5\n2\n255\n"), Err(Error::CorruptHeader(_))));
        assert!(matches!(
            decode(b"P5\n2 2\n0\n\0\0\0\0"),
            Err(Error::CorruptHeader(_))
        ));
        assert!(matches!(
            decode(&pgm(2, 2, &[1, 2, 3])),
            Err(Error::CorruptData(_))
        ));
        assert!(matches!(
            load_image("/definitely/not/here.pgm"),
            Err(Error::MissingFile(_))
        ));
        let mut bad_png = PNG_SIGNATURE.to_vec();
        bad_png.extend_from_slice(b"garbage");
        assert!(decode(&bad_png).is_err());
    }

    #[test]
    fn pgm_encoding_quantizes() {
        let img = ImageBuffer::new(1, 3, vec![1.0, 0.5, 0.0]).unwrap();
        let bytes = encode_pgm(&img);
        assert_eq!(&bytes[..11], b"P5\n3 1\n255\n");
        assert_eq!(&bytes[11..], &[255, 128, 0]);
    }

    #[test]
    fn png_roundtrip_gray() {
        let img = ImageBuffer::new(2, 3, vec![0.0, 1.0, 0.5, 0.25, 0.75, 0.1])
            .unwrap()
            .quantized();
        let back = decode(&encode_png(&img).unwrap()).unwrap();
        assert_eq!(back, img);
    }

    #[test]
    fn rgb_png_uses_rec601_luma() {
        let mut out = Vec::new();
        {
            let mut enc = png::Encoder::new(&mut out, 3, 1);
            enc.set_color(png::ColorType::Rgb);
            enc.set_depth(png::BitDepth::Eight);
            let mut w = enc.write_header().unwrap();
            w.write_image_data(&[255, 0, 0, 0, 255, 0, 0, 0, 255]).unwrap();
        }
        let img = decode(&out).unwrap();
        let expected = [0.299, 0.587, 0.114];
        for (got, want) in img.pixels().iter().zip(expected) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn sixteen_bit_gray_png() {
        let mut out = Vec::new();
        {
            let mut enc = png::Encoder::new(&mut out, 2, 1);
            enc.set_color(png::ColorType::Grayscale);
            enc.set_depth(png::BitDepth::Sixteen);
            let mut w = enc.write_header().unwrap();
            w.write_image_data(&[0xFF, 0xFF, 0x00, 0x01]).unwrap();
        }
        let img = decode(&out).unwrap();
        assert_eq!(img.pixels(), &[1.0, 1.0 / 65535.0]);
    }

    #[test]
    fn unknown_extension_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let img = ImageBuffer::filled(2, 2, 0.5).unwrap();
        assert!(matches!(
            save_image(&img, dir.path().join("x.jpg")),
            Err(Error::UnknownExtension(_))
        ));
        assert!(matches!(
            save_image(&img, dir.path().join("missing_dir/x.pgm")),
            Err(Error::Io { .. })
        ));
    }

    #[test]
    fn save_load_roundtrip_both_formats() {
        let dir = tempfile::tempdir().unwrap();
        let img = ImageBuffer::from_fn(5, 7, |r, c| ((r * 7 + c) as f64) / 40.0).quantized();
        for name in ["a.pgm", "a.PNG"] {
            let p = dir.path().join(name);
            save_image(&img, &p).unwrap();
            assert_eq!(load_image(&p).unwrap(), img);
        }
    }
}
