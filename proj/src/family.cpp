#include "orbits/family.hpp"

#include "orbits/error.hpp"

namespace orbits {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedToken: return "MalformedToken";
    case ErrorKind::LabelCountError: return "LabelCountError";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::NotFixedPointFree: return "NotFixedPointFree";
    case ErrorKind::FamilyMismatch: return "FamilyMismatch";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::OddSignCount: return "OddSignCount";
    case ErrorKind::InvalidGenerator: return "InvalidGenerator";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::Contains1212: return "Contains1212";
    case ErrorKind::GrassmannianViolation: return "GrassmannianViolation";
    case ErrorKind::PatternNotInvolution: return "PatternNotInvolution";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

namespace {
Family make(Tag t, int n, int p, int q) {
  if (n < 0 || p < 0 || q < 0) throw Error(ErrorKind::SizeMismatch, "negative family size");
  Family f;
  f.tag = t;
  f.n = n;
  f.p = p;
  f.q = q;
  return f;
}
}  // namespace

Family Family::ai(int n) { return make(Tag::AI, n, 0, 0); }
Family Family::aii(int n) {
  if (n % 2) throw Error(ErrorKind::SizeMismatch, "AII needs even degree");
  return make(Tag::AII, n, 0, 0);
}
Family Family::aiii(int p, int q) { return make(Tag::AIII, 0, p, q); }
Family Family::ci(int m) { return make(Tag::CI, m, 0, 0); }
Family Family::cii(int p, int q) { return make(Tag::CII, 0, p, q); }
Family Family::bdi(int p, int q) { return make(Tag::BDI, 0, p, q); }
Family Family::diii(int n) { return make(Tag::DIII, n, 0, 0); }

int Family::length() const {
  switch (tag) {
    case Tag::AI:
    case Tag::AII: return n;
    case Tag::AIII:
    case Tag::BDI: return p + q;
    case Tag::CII: return 2 * (p + q);
    case Tag::CI:
    case Tag::DIII: return 2 * n;
  }
  return 0;
}

std::string Family::name() const {
  std::string s = tag_name(tag);
  switch (tag) {
    case Tag::AIII:
    case Tag::CII:
    case Tag::BDI: return s + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    default: return s + "(" + std::to_string(n) + ")";
  }
}

const char* tag_name(Tag t) {
  switch (t) {
    case Tag::AI: return "AI";
    case Tag::AII: return "AII";
    case Tag::AIII: return "AIII";
    case Tag::CI: return "CI";
    case Tag::CII: return "CII";
    case Tag::BDI: return "BDI";
    case Tag::DIII: return "DIII";
  }
  return "?";
}

bool parse_tag(const std::string& s, Tag& out) {
  for (Tag t : {Tag::AI, Tag::AII, Tag::AIII, Tag::CI, Tag::CII, Tag::BDI, Tag::DIII}) {
    if (s == tag_name(t)) {
      out = t;
      return true;
    }
  }
  return false;
}

}  // namespace orbits
