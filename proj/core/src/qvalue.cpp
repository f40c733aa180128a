#include "mzv/qvalue.hpp"

namespace mzv {

MonomialQForm qform_of_letter(const Letter& l) {
  if (l.sym < 'a' || l.sym > 'z')
    throw MzvError(ErrorKind::OutOfDomain, "letters map to forms from 'a' on");
  return MonomialQForm{Rat(l.sym - 'a'), l.shift};
}

namespace {

long to_integer(const Rat& r, const char* what) {
  if (denominator(r) != 1)
    throw MzvError(ErrorKind::Unsupported,
                   std::string(what) + " must come out integral");
  return static_cast<long>(numerator(r));
}

Rat q_value_forms(const std::vector<MonomialQForm>& forms, const Rat& x,
                  const Rat& q) {
  if (!(q > 0 && q < 1))
    throw MzvError(ErrorKind::OutOfDomain, "q must lie in (0,1)");
  long k = static_cast<long>(forms.size());
  if (k == 0) return 1;

  // c_r = p_r + 1; value =
  // (1-q)^k q^{sum j_r c_r} x^{sum c_r} prod_i (1 - q^{c_i + ... + c_k})^{-1}
  Rat shift_expo = 0, x_expo = 0;
  for (const MonomialQForm& f : forms) {
    if (f.exponent < 0)
      throw MzvError(ErrorKind::OutOfDomain, "form exponents must be >= 0");
    if (f.shift < 0)
      throw MzvError(ErrorKind::OutOfDomain, "shifts must be >= 0");
    Rat c = f.exponent + 1;
    shift_expo += Rat(f.shift) * c;
    x_expo += c;
  }

  Rat value = rat_pow(1 - q, k);
  value *= rat_pow(q, to_integer(shift_expo, "q exponent"));
  value *= rat_pow(x, to_integer(x_expo, "x exponent"));
  Rat suffix = 0;
  for (long i = k - 1; i >= 0; --i) {
    suffix += forms[i].exponent + 1;
    value /= 1 - rat_pow(q, to_integer(suffix, "suffix exponent"));
  }
  return value;
}

std::vector<MonomialQForm> forms_of_word(const Word& w) {
  std::vector<MonomialQForm> forms;
  forms.reserve(w.letters.size());
  for (const Letter& l : w.letters) forms.push_back(qform_of_letter(l));
  return forms;
}

}  // namespace

Rat q_word_value_exact(const Word& w, const Rat& x, const Rat& q) {
  return q_value_forms(forms_of_word(w), x, q);
}

Rat q_word_value_exact(const NcPoly& p, const Rat& x, const Rat& q) {
  Rat total = 0;
  for (const auto& [w, c] : p.terms()) {
    if (!c.is_real())
      throw MzvError(ErrorKind::OutOfDomain,
                     "q-value needs real coefficients");
    total += c.re * q_word_value_exact(w, x, q);
  }
  return total;
}

Rat classical_word_value(const Word& w, const Rat& x) {
  std::vector<MonomialQForm> forms = forms_of_word(w);
  Rat value = 1;
  Rat x_expo = 0;
  Rat suffix = 0;
  for (long i = static_cast<long>(forms.size()) - 1; i >= 0; --i) {
    Rat c = forms[i].exponent + 1;
    x_expo += c;
    suffix += c;
    value /= suffix;
  }
  return value * rat_pow(x, to_integer(x_expo, "x exponent"));
}

std::vector<Rat> q_limit_check(const Word& w, const Rat& x,
                               const std::vector<Rat>& qs) {
  std::vector<Rat> out;
  out.reserve(qs.size());
  for (const Rat& q : qs) out.push_back(q_word_value_exact(w, x, q));
  return out;
}

}  // namespace mzv
