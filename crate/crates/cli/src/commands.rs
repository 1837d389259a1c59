use num_bigint::RandBigInt;

use ncs_core::analysis::{ball_growth, bench as run_bench, BenchOp};
use ncs_core::attacks::{conj_search, dlog_bruteforce, power_conj_search, PowerSearchOutcome, SearchBudget, SearchOutcome};
use ncs_core::format::{parse_uint, write_record};
use ncs_core::group::seeded_rng;
use ncs_core::protocols::ccs::{ccs_decrypt, ccs_encrypt, ccs_keygen, Sha256Hash};
use ncs_core::protocols::files::{
    read_ccs_ciphertext, read_ccs_public, read_ccs_secret, read_pcke_secret, write_ccs_ciphertext, write_ccs_public,
    write_ccs_secret, write_pcke_secret, ElementRecord,
};
use ncs_core::protocols::kk06::{kk06_decrypt, kk06_encrypt, kk06_keygen, Kk06Ciphertext, Kk06Public, Kk06Secret};
use ncs_core::protocols::ncs::{ncs_decrypt, ncs_encrypt, ncs_keygen, NcsCiphertext, NcsPublic, NcsSecret, Pairing};
use ncs_core::protocols::pcke::{pcke_decrypt, pcke_encrypt, pcke_inner, pcke_keygen, PckeCiphertext, PckePublic};
use ncs_core::protocols::{Decrypted, PlatformSpec};
use ncs_core::{Element, Group, GroupHandle, Word};

use crate::failure::Failure;
use crate::files::{load_ccs_params, load_platform, read, read_message, with_suffix, write_message, write_one, Staged};
use crate::{AttackArgs, BenchArgs, DecryptArgs, EncryptArgs, ExchangeArgs, GrowthArgs, KeygenArgs, Scheme, SearchArgs};

fn budget(s: &SearchArgs) -> SearchBudget {
    SearchBudget::new(s.budget_len, s.budget_states).with_max_power(s.budget_power)
}

fn word_element(group: &GroupHandle, word: &str) -> Result<Element, Failure> {
    let w: Word = word.parse()?;
    Ok(group.eval(&w)?)
}

fn base_element(group: &GroupHandle, word: Option<&str>) -> Result<Element, Failure> {
    let word = word.ok_or_else(|| Failure::malformed("the power-conjugacy scheme needs --element"))?;
    word_element(group, word)
}

fn pairing(spec: &PlatformSpec<GroupHandle>) -> Pairing {
    if spec.factors.is_some() {
        Pairing::DirectProduct
    } else {
        Pairing::Checked
    }
}

/// Prints `text` and, when asked, writes it to `out` as well.
fn report(text: &str, out: Option<&std::path::Path>) -> Result<(), Failure> {
    print!("{text}");
    match out {
        Some(path) => write_one(path, text),
        None => Ok(()),
    }
}

pub fn keygen(a: &KeygenArgs) -> Result<(), Failure> {
    let mut rng = seeded_rng(a.common.seed);
    let (public, secret) = match a.scheme {
        Scheme::Ccs => {
            let params = load_ccs_params(&a.common.platform)?;
            let keys = ccs_keygen(&params, &mut rng)?;
            (write_ccs_public(&params, &keys.public), write_ccs_secret(&params, &keys.secret))
        }
        Scheme::Kk06 => {
            let spec = load_platform(&a.common.platform)?;
            let keys = kk06_keygen(&spec, &mut rng)?;
            (keys.public.write(&spec.group), keys.secret.write(&spec.group))
        }
        Scheme::Pcke => {
            let spec = load_platform(&a.common.platform)?;
            let g = base_element(&spec.group, a.element.as_deref())?;
            let keys = pcke_keygen(&spec, g, a.n, &mut rng)?;
            (keys.public.write(&spec.group), write_pcke_secret(&spec.group, &keys.secret))
        }
        Scheme::Ncs => {
            let spec = load_platform(&a.common.platform)?;
            let keys = ncs_keygen(&spec, pairing(&spec), &mut rng)?;
            (keys.public.write(&spec.group), keys.secret.write(&spec.group))
        }
    };
    let mut staged = Staged::default();
    staged.add(&with_suffix(&a.out, ".pub"), &public)?;
    staged.add(&with_suffix(&a.out, ".sec"), &secret)?;
    staged.commit()
}

fn message_line(a: &EncryptArgs) -> Result<(String, bool), Failure> {
    match (&a.r#in, &a.message) {
        (Some(path), _) => Ok((read_message(path)?, false)),
        (None, Some(m)) => Ok((m.clone(), true)),
        (None, None) => Err(Failure::malformed("no message given")),
    }
}

fn group_message(group: &GroupHandle, a: &EncryptArgs) -> Result<Element, Failure> {
    match message_line(a)? {
        (word, true) => word_element(group, &word),
        (wire, false) => Ok(group.decode(&wire)?),
    }
}

pub fn encrypt(a: &EncryptArgs) -> Result<(), Failure> {
    let mut rng = seeded_rng(a.common.seed);
    let key = read(&a.key)?;
    let text = match a.scheme {
        Scheme::Ccs => {
            let params = load_ccs_params(&a.common.platform)?;
            let (key_params, pk) = read_ccs_public(&key)?;
            if key_params != params {
                return Err(Failure::malformed("public key was made for different parameters"));
            }
            let m = parse_uint(&message_line(a)?.0)?;
            let r = rng.gen_biguint_below(&params.q);
            write_ccs_ciphertext(&ccs_encrypt(&params, &pk, &m, &r, &Sha256Hash)?)
        }
        Scheme::Kk06 => {
            let spec = load_platform(&a.common.platform)?;
            let pk = Kk06Public::read(&spec.group, &key)?;
            let x = group_message(&spec.group, a)?;
            kk06_encrypt(&spec, &pk, &x, &mut rng)?.write(&spec.group)
        }
        Scheme::Pcke => {
            let spec = load_platform(&a.common.platform)?;
            let pk = PckePublic::read(&spec.group, &key)?;
            let x = group_message(&spec.group, a)?;
            pcke_encrypt(&spec, &pk, &x, a.m, &mut rng)?.write(&spec.group)
        }
        Scheme::Ncs => {
            let spec = load_platform(&a.common.platform)?;
            let pk = NcsPublic::read(&spec.group, &key)?;
            let m = group_message(&spec.group, a)?;
            ncs_encrypt(&spec, &pk, &m, &mut rng)?.write(&spec.group)
        }
    };
    write_one(&a.out, &text)
}

pub fn decrypt(a: &DecryptArgs) -> Result<(), Failure> {
    let key = read(&a.key)?;
    let ct = read(&a.r#in)?;
    let line = match a.scheme {
        Scheme::Ccs => {
            let params = load_ccs_params(&a.common.platform)?;
            let (key_params, sk) = read_ccs_secret(&key)?;
            if key_params != params {
                return Err(Failure::malformed("secret key was made for different parameters"));
            }
            match ccs_decrypt(&params, &sk, &read_ccs_ciphertext(&ct)?, &Sha256Hash) {
                Decrypted::Accept(m) => m.to_string(),
                Decrypted::Reject => return Err(Failure::Reject),
            }
        }
        Scheme::Kk06 => {
            let spec = load_platform(&a.common.platform)?;
            let g = &spec.group;
            let x = kk06_decrypt(g, &Kk06Secret::read(g, &key)?, &Kk06Ciphertext::read(g, &ct)?)?;
            g.encode(&x)
        }
        Scheme::Pcke => {
            let spec = load_platform(&a.common.platform)?;
            let g = &spec.group;
            let x = pcke_decrypt(g, &read_pcke_secret(g, &key)?, &PckeCiphertext::read(g, &ct)?, &budget(&a.search))?;
            g.encode(&x)
        }
        Scheme::Ncs => {
            let spec = load_platform(&a.common.platform)?;
            let g = &spec.group;
            match ncs_decrypt(g, &NcsSecret::read(g, &key)?, &NcsCiphertext::read(g, &ct)?)? {
                Decrypted::Accept(m) => g.encode(&m),
                Decrypted::Reject => return Err(Failure::Reject),
            }
        }
    };
    if let Some(out) = &a.out {
        write_one(out, &write_message(&line))?;
    }
    println!("{line}");
    Ok(())
}

pub fn exchange(a: &ExchangeArgs) -> Result<(), Failure> {
    let mut rng = seeded_rng(a.common.seed);
    let spec = load_platform(&a.common.platform)?;
    let g = &spec.group;
    let (header, elems, verdict) = match a.scheme {
        Scheme::Kk06 => {
            let keys = kk06_keygen(&spec, &mut rng)?;
            let x = spec.sample_element(&mut rng)?;
            let ct = kk06_encrypt(&spec, &keys.public, &x, &mut rng)?;
            let got = kk06_decrypt(g, &keys.secret, &ct)?;
            let verdict = if got == x { "agree" } else { "disagree" };
            ("kk06-exchange v1", vec![keys.public.b, keys.public.c, ct.e, ct.h, x, got], verdict)
        }
        Scheme::Pcke => {
            let base = base_element(g, a.element.as_deref())?;
            let keys = pcke_keygen(&spec, base, a.n, &mut rng)?;
            let x = spec.sample_element(&mut rng)?;
            let ct = pcke_encrypt(&spec, &keys.public, &x, a.m, &mut rng)?;
            let got = pcke_decrypt(g, &keys.secret, &ct, &budget(&a.search))?;
            let verdict = if got == x {
                "agree"
            } else if g.conj(&pcke_inner(g, &keys.secret, &ct.h)?, &got)? == ct.e {
                "conjugate"
            } else {
                "disagree"
            };
            ("pcke-exchange v1", vec![keys.public.v, keys.public.w, ct.e, ct.h, x, got], verdict)
        }
        Scheme::Ccs | Scheme::Ncs => return Err(Failure::malformed("exchange supports the kk06 and pcke schemes")),
    };
    write_one(&a.out, &write_record(header, elems.iter().map(|e| g.encode(e))))?;
    println!("{verdict}");
    Ok(())
}

pub fn attack(a: &AttackArgs) -> Result<(), Failure> {
    let key = read(&a.key)?;
    let budget = budget(&a.search);
    let (line, found) = match a.scheme {
        Scheme::Ccs => {
            let params = load_ccs_params(&a.common.platform)?;
            let (_, pk) = read_ccs_public(&key)?;
            match dlog_bruteforce(&params.p, &params.g1, &pk.h, &params.q) {
                Some(z) => (format!("found z={z}"), true),
                None => (format!("notfound states={}", params.q), false),
            }
        }
        scheme => {
            let spec = load_platform(&a.common.platform)?;
            let g = &spec.group;
            let gens = g.generators();
            let single = |b: &Element, c: &Element| -> Result<(String, bool), Failure> {
                let out = conj_search(g, b, c, &gens, &budget)?;
                Ok((out.to_string(), matches!(out, SearchOutcome::Found { .. })))
            };
            match scheme {
                Scheme::Kk06 => {
                    let pk = Kk06Public::read(g, &key)?;
                    single(&pk.b, &pk.c)?
                }
                Scheme::Ncs => {
                    let pk = NcsPublic::read(g, &key)?;
                    single(&pk.g1, &pk.h)?
                }
                _ => {
                    let pk = PckePublic::read(g, &key)?;
                    let (out, _) = power_conj_search(g, &pk.v, &pk.w, &gens, &budget)?;
                    (out.to_string(), matches!(out, PowerSearchOutcome::Found { .. }))
                }
            }
        }
    };
    report(&format!("{line}\n"), a.out.as_deref())?;
    if found {
        Ok(())
    } else {
        Err(Failure::NotFound("search budget exhausted".into()))
    }
}

pub fn growth(a: &GrowthArgs) -> Result<(), Failure> {
    let spec = load_platform(&a.common.platform)?;
    let rep = ball_growth(&spec.group, &spec.group.generators(), a.radius, a.budget_states)?;
    report(&rep.to_string(), a.out.as_deref())
}

pub fn bench(a: &BenchArgs) -> Result<(), Failure> {
    let op: BenchOp = a.op.parse()?;
    let spec = load_platform(&a.common.platform)?;
    let rep = run_bench(&spec.group, op, a.trials, spec.word_length, a.common.seed)?;
    report(&rep.summary(), a.out.as_deref())?;
    eprintln!("{:.6} s, {:.0} ops/s", rep.seconds, rep.ops_per_second());
    Ok(())
}
