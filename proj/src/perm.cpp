#include <cctype>
#include <numeric>
#include <sstream>

#include "hcw/error.hpp"
#include "hcw/perm.hpp"

namespace hcw
{

Perm::Perm(unsigned degree) : images_(degree)
{ std::iota(images_.begin(), images_.end(), 0u); }

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw ValidationError("image list is not a permutation");
    seen[x] = true;
  }
}

Perm Perm::parse(std::string_view text, unsigned degree)
{
  Perm p(degree);
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == ','))
      ++pos;
  };

  skip_space();
  if (pos == text.size())
    throw ParseError("empty permutation string; use \"()\" for the identity");

  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' in permutation \"" + std::string(text) + "\"");
    ++pos;

    std::vector<unsigned> cycle;
    for (;;) {
      skip_space();
      if (pos == text.size())
        throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("unexpected character in \"" + std::string(text) + "\"");

      unsigned long v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
        if (v > degree)
          throw ParseError("point out of range in \"" + std::string(text) + "\"");
        ++pos;
      }
      if (v == 0)
        throw ParseError("points are 1-based in \"" + std::string(text) + "\"");
      if (used[v - 1])
        throw ParseError("repeated point in \"" + std::string(text) + "\"");
      used[v - 1] = true;
      cycle.push_back(static_cast<unsigned>(v - 1));
    }

    for (std::size_t i = 0; i < cycle.size(); ++i)
      p.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }

  return p;
}

bool Perm::is_identity() const
{
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

unsigned Perm::first_moved_point() const
{
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return i;
  return degree();
}

Perm Perm::operator*(Perm const &rhs) const
{
  Perm r = *this;
  return r *= rhs;
}

Perm &Perm::operator*=(Perm const &rhs)
{
  if (rhs.images_.size() != images_.size())
    throw ValidationError("permutation degree mismatch");
  if (&rhs == this) {
    Perm const copy = rhs;
    return *this *= copy;
  }
  for (auto &x : images_)
    x = rhs.images_[x];
  return *this;
}

Perm Perm::inverse() const
{
  Perm r = *this;
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = i;
  return r;
}

Perm Perm::pow(long e) const
{
  Perm base = e < 0 ? inverse() : *this;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  Perm result(degree());
  while (n) {
    if (n & 1u)
      result *= base;
    base *= base;
    n >>= 1u;
  }
  return result;
}

unsigned long Perm::order() const
{
  unsigned long o = 1;
  for (auto const &c : cycles())
    o = std::lcm(o, static_cast<unsigned long>(c.size()));
  return o;
}

std::vector<std::vector<unsigned>> Perm::cycles() const
{
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> seen(images_.size(), false);
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    std::vector<unsigned> c;
    for (unsigned j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Perm::to_string() const
{
  auto const cs = cycles();
  if (cs.empty())
    return "()";

  std::ostringstream os;
  for (auto const &c : cs) {
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? " " : "") << c[i] + 1;
    os << ")";
  }
  return os.str();
}

std::size_t PermHash::operator()(Perm const &p) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace hcw
