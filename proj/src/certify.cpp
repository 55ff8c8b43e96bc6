#include "certify.hpp"

#include <json.hpp>

#include "modarith.hpp"

namespace invq {

GoldFactor GoldFactor::frobenius(unsigned t, mpz_class mult) {
  if (t < 1) throw_bad_argument("frobenius factor: power must be >= 1");
  GoldFactor f;
  f.kind = Kind::Frobenius;
  f.a = t;
  f.exponent_value = mpz_class(1) << t;
  f.multiplicity = std::move(mult);
  return f;
}

GoldFactor GoldFactor::quadratic(unsigned a, mpz_class mult) {
  if (a < 1) throw_bad_argument("quadratic factor: a must be >= 1");
  GoldFactor f;
  f.kind = Kind::Quadratic;
  f.a = a;
  f.exponent_value = (mpz_class(1) << a) + 1;
  f.multiplicity = std::move(mult);
  return f;
}

GoldFactor GoldFactor::cubic(unsigned a, unsigned b, mpz_class mult) {
  if (b < 1 || a <= b) throw_bad_argument("cubic factor: need a > b >= 1");
  GoldFactor f;
  f.kind = Kind::Cubic;
  f.a = a;
  f.b = b;
  f.exponent_value = (mpz_class(1) << a) + (mpz_class(1) << b) + 1;
  f.multiplicity = std::move(mult);
  return f;
}

mpz_class GoldFactor::expected_value() const {
  switch (kind) {
    case Kind::Frobenius:
      return mpz_class(1) << a;
    case Kind::Quadratic:
      return (mpz_class(1) << a) + 1;
    case Kind::Cubic:
      return (mpz_class(1) << a) + (mpz_class(1) << b) + 1;
  }
  throw Error(ErrorCode::Internal, "unreachable factor kind");
}

VerifyResult verify(const DecompositionCertificate& cert) {
  if (cert.n < 3 || cert.n % 2 == 0)
    throw Error(ErrorCode::ValidationError,
                "verify: certificate n must be odd and >= 3");
  for (const GoldFactor& f : cert.factors) {
    if (f.exponent_value != f.expected_value())
      throw Error(ErrorCode::ValidationError,
                  "verify: factor value does not match its kind parameters");
    if (f.multiplicity < 0)
      throw Error(ErrorCode::ValidationError,
                  "verify: negative multiplicity");
  }

  const mpz_class modulus = (mpz_class(1) << cert.n) - 1;
  VerifyResult out;
  mpz_class acc = 1;
  for (const GoldFactor& f : cert.factors) {
    if (gcd(f.exponent_value, modulus) != 1) {
      out.ok = false;
      out.residue = 0;
      out.detail = "factor " + f.exponent_value.get_str() +
                   " is not a unit mod 2^n - 1";
      return out;
    }
    acc = (acc * modpow(f.exponent_value, f.multiplicity, modulus)) % modulus;
  }
  out.residue = acc;
  out.ok = (acc == modulus - 1);
  if (!out.ok)
    out.detail =
        "residue " + acc.get_str() + " != " + mpz_class(modulus - 1).get_str();
  return out;
}

namespace {

const char* method_name(DecompositionCertificate::Method m) {
  return m == DecompositionCertificate::Method::Theorem1 ? "theorem1"
                                                         : "algorithm1";
}

const char* kind_name(GoldFactor::Kind k) {
  switch (k) {
    case GoldFactor::Kind::Frobenius:
      return "frobenius";
    case GoldFactor::Kind::Quadratic:
      return "quadratic";
    case GoldFactor::Kind::Cubic:
      return "cubic";
  }
  return "?";
}

}  // namespace

std::string serialize(const DecompositionCertificate& cert) {
  nlohmann::ordered_json doc;
  doc["n"] = cert.n;
  doc["method"] = method_name(cert.method);
  doc["factors"] = nlohmann::ordered_json::array();
  for (const GoldFactor& f : cert.factors) {
    nlohmann::ordered_json jf;
    jf["kind"] = kind_name(f.kind);
    if (f.kind == GoldFactor::Kind::Cubic)
      jf["params"] = {f.a, f.b};
    else
      jf["params"] = {f.a};
    jf["multiplicity"] = f.multiplicity.get_str();
    doc["factors"].push_back(std::move(jf));
  }
  return doc.dump(2) + "\n";
}

DecompositionCertificate deserialize(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate parse: ") + e.what());
  }
  // Exponent parameters size later shift amounts, so bound them before
  // touching big-integer arithmetic.
  auto small_uint = [](const nlohmann::json& v, const char* what) -> unsigned {
    if (!v.is_number_unsigned() || v.get<uint64_t>() > 1000000)
      throw ParseError(std::string("certificate parse: ") + what +
                       " out of range");
    return v.get<unsigned>();
  };
  try {
    DecompositionCertificate cert;
    cert.n = small_uint(doc.at("n"), "n");
    std::string method = doc.at("method").get<std::string>();
    if (method == "theorem1")
      cert.method = DecompositionCertificate::Method::Theorem1;
    else if (method == "algorithm1")
      cert.method = DecompositionCertificate::Method::Algorithm1;
    else
      throw ParseError("certificate parse: unknown method '" + method + "'");
    for (const auto& jf : doc.at("factors")) {
      std::string kind = jf.at("kind").get<std::string>();
      const auto& params = jf.at("params");
      std::string mult_str = jf.at("multiplicity").get<std::string>();
      if (mult_str.empty() ||
          mult_str.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("certificate parse: bad multiplicity '" + mult_str +
                         "'");
      mpz_class mult(mult_str);
      if (kind == "frobenius" && params.size() == 1)
        cert.factors.push_back(
            GoldFactor::frobenius(small_uint(params[0], "param"), mult));
      else if (kind == "quadratic" && params.size() == 1)
        cert.factors.push_back(
            GoldFactor::quadratic(small_uint(params[0], "param"), mult));
      else if (kind == "cubic" && params.size() == 2)
        cert.factors.push_back(GoldFactor::cubic(small_uint(params[0], "param"),
                                                 small_uint(params[1], "param"),
                                                 mult));
      else
        throw ParseError("certificate parse: unknown kind/params shape");
    }
    cert.verified = verify(cert).ok;
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate parse: ") + e.what());
  }
}

}  // namespace invq
