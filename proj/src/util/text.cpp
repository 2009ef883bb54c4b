#include "flavorbench/util/text.hpp"

#include <algorithm>
#include <cctype>

namespace flavorbench {

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

std::string trim(std::string_view s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && is_space(s[begin])) ++begin;
  while (end > begin && is_space(s[end - 1])) --end;
  return std::string(s.substr(begin, end - begin));
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (is_space(c)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    }
  }
  return out;
}

std::string strip_punctuation(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (std::ispunct(static_cast<unsigned char>(c))) c = ' ';
  }
  return out;
}

std::string singularize_last_word(std::string_view s) {
  std::string out(s);
  const auto word_begin = out.find_last_of(' ') + 1;  // npos+1 == 0
  const std::string_view word = std::string_view(out).substr(word_begin);
  if (word.size() >= 4 && word.ends_with("ies")) {
    out.resize(out.size() - 3);
    out += 'y';
    return out;
  }
  if (word.size() >= 4 && word.ends_with("es")) {
    const std::string_view stem = word.substr(0, word.size() - 2);
    if (stem.ends_with("s") || stem.ends_with("x") || stem.ends_with("z") ||
        stem.ends_with("ch") || stem.ends_with("sh")) {
      out.resize(out.size() - 2);
      return out;
    }
  }
  if (word.size() >= 2 && word.ends_with("s") && !word.ends_with("ss")) {
    out.pop_back();
  }
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      return parts;
    }
    parts.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t prev = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t insert_or_delete = std::min(row[j], row[j - 1]) + 1;
      const std::size_t substitute = prev + (a[i - 1] == b[j - 1] ? 0 : 1);
      prev = row[j];
      row[j] = std::min(insert_or_delete, substitute);
    }
  }
  return row[b.size()];
}

bool starts_with_icase(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[i])) !=
        std::tolower(static_cast<unsigned char>(prefix[i]))) {
      return false;
    }
  }
  return true;
}

}  // namespace flavorbench
