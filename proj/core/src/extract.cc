// Copyright 2026 The Graphbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphbench/extract.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "absl/strings/ascii.h"

namespace graphbench {
namespace {

using Phrase = std::vector<std::string_view>;

struct IntToken {
  int64_t value;
  size_t begin;
  size_t end;
};

struct WordToken {
  std::string word;
  size_t begin;  // byte offset of the source word
  size_t end;
};

bool IsDigit(char c) { return c >= '0' && c <= '9'; }
bool IsAlpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool IsBlank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '*'; }

std::string Lower(std::string_view s) { return absl::AsciiStrToLower(std::string(s)); }

// Offset just past the last "Answer:" sentinel, with surrounding markdown
// emphasis and blanks skipped.
std::optional<size_t> LastSentinel(std::string_view text) {
  const std::string lower = Lower(text);
  std::optional<size_t> found;
  size_t pos = 0;
  while ((pos = lower.find("answer", pos)) != std::string::npos) {
    size_t j = pos + 6;
    while (j < lower.size() && (lower[j] == '*' || lower[j] == '_' ||
                                lower[j] == ' ')) {
      ++j;
    }
    if (j < lower.size() && lower[j] == ':') {
      size_t k = j + 1;
      while (k < lower.size() && (IsBlank(lower[k]) || lower[k] == '_')) ++k;
      found = k;
    }
    pos += 6;
  }
  return found;
}

// Rest of the sentinel's line, or the next non-blank line when the sentinel
// ends its line. An unclosed bracket extends the segment to its closer.
std::string_view SentinelSegment(std::string_view text, size_t start) {
  auto line_at = [&](size_t from) {
    size_t end = text.find('\n', from);
    if (end == std::string_view::npos) end = text.size();
    return std::pair(from, end);
  };
  auto blank = [&](size_t from, size_t to) {
    for (size_t i = from; i < to; ++i) {
      if (!IsBlank(text[i]) && text[i] != '_') return false;
    }
    return true;
  };
  auto [from, to] = line_at(start);
  while (blank(from, to) && to < text.size()) {
    std::tie(from, to) = line_at(to + 1);
  }
  std::string_view segment = text.substr(from, to - from);
  for (auto [open, close] : {std::pair('[', ']'), std::pair('{', '}')}) {
    const size_t o = segment.rfind(open);
    if (o != std::string_view::npos &&
        segment.find(close, o) == std::string_view::npos) {
      const size_t c = text.find(close, from + o);
      if (c != std::string_view::npos) {
        segment = text.substr(from, c + 1 - from);
      }
    }
  }
  return segment;
}

std::string_view TrailingWindow(std::string_view text, size_t window) {
  if (text.size() <= window) return text;
  size_t start = text.size() - window;
  while (start > 0 && IsDigit(text[start]) && IsDigit(text[start - 1])) --start;
  return text.substr(start);
}

std::vector<IntToken> Integers(std::string_view s) {
  std::vector<IntToken> out;
  size_t i = 0;
  while (i < s.size()) {
    if (!IsDigit(s[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < s.size() && IsDigit(s[j])) ++j;
    int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + j, value);
    if (ec == std::errc() && ptr == s.data() + j) {
      out.push_back({value, i, j});
    }
    i = j;
  }
  return out;
}

// Drops (...) and [...] asides, keeping the text outside them.
std::string StripAsides(std::string_view s) {
  std::string out;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') {
      ++depth;
    } else if ((c == ')' || c == ']') && depth > 0) {
      --depth;
    } else if (depth == 0) {
      out.push_back(c);
    }
  }
  return out;
}

const std::vector<std::string_view>& FillerWords() {
  static const auto* const kWords = new std::vector<std::string_view>{
      "a",      "an",     "any",   "the",       "indeed", "therefore",
      "thus",   "also",   "actually", "definitely", "clearly", "truly",
      "really", "certainly", "hence", "so",       "single", "at", "least",
      "one"};
  return *kWords;
}

void PushWord(std::string word, size_t begin, size_t end,
              std::vector<WordToken>& out) {
  while (!word.empty() && (word.back() == '\'' || word.back() == '-')) {
    word.pop_back();
  }
  while (!word.empty() && (word.front() == '\'' || word.front() == '-')) {
    word.erase(word.begin());
  }
  if (word.empty()) return;

  auto emit = [&](std::string_view w) {
    if (std::find(FillerWords().begin(), FillerWords().end(), w) !=
        FillerWords().end()) {
      return;
    }
    out.push_back({std::string(w), begin, end});
  };

  // Hyphenated words split into parts; "non" reads as "not".
  if (const size_t dash = word.find('-'); dash != std::string::npos) {
    std::string head = word.substr(0, dash);
    std::string tail = word.substr(dash + 1);
    PushWord(head == "non" ? "not" : head, begin, end, out);
    PushWord(tail, begin, end, out);
    return;
  }
  if (word == "cannot") {
    emit("can");
    emit("not");
    return;
  }
  if (word.size() > 3 && word.ends_with("n't")) {
    std::string stem = word.substr(0, word.size() - 3);
    if (stem == "ca") stem = "can";
    if (stem == "wo") stem = "will";
    emit(stem);
    emit("not");
    return;
  }
  if (word == "it's" || word == "there's" || word == "that's") {
    emit(word.substr(0, word.size() - 2));
    emit("is");
    return;
  }
  if (word == "cycles") word = "cycle";
  emit(word);
}

std::vector<WordToken> Words(std::string_view text) {
  std::vector<WordToken> out;
  size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (!IsAlpha(c) && !IsDigit(c)) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() &&
           (IsAlpha(text[j]) || IsDigit(text[j]) || text[j] == '\'' ||
            text[j] == '-')) {
      ++j;
    }
    PushWord(Lower(text.substr(i, j - i)), i, j, out);
    i = j;
  }
  return out;
}

std::optional<bool> YesNo(std::string_view word) {
  if (word == "yes" || word == "true") return true;
  if (word == "no" || word == "false") return false;
  return std::nullopt;
}

struct PhraseSet {
  std::vector<Phrase> positive;
  std::vector<Phrase> negative;
};

const PhraseSet& PhrasesFor(TaskKind task) {
  static const auto* const kCycle = new PhraseSet{
      .positive = {{"contains", "cycle"},
                   {"contain", "cycle"},
                   {"has", "cycle"},
                   {"have", "cycle"},
                   {"there", "is", "cycle"},
                   {"there", "are", "cycle"},
                   {"cycle", "exists"},
                   {"cycle", "exist"},
                   {"is", "cyclic"},
                   {"forms", "cycle"},
                   {"form", "cycle"},
                   {"found", "cycle"},
                   {"cycle", "detected"},
                   {"cycle", "is", "present"},
                   {"not", "acyclic"},
                   {"cycle", "yes"},
                   {"cycle", "true"}},
      .negative = {{"no", "cycle"},
                   {"not", "contain", "cycle"},
                   {"not", "have", "cycle"},
                   {"not", "form", "cycle"},
                   {"not", "cyclic"},
                   {"acyclic"},
                   {"cycle", "free"},
                   {"without", "cycle"},
                   {"cycle", "no"},
                   {"cycle", "false"}}};
  static const auto* const kBipartite = new PhraseSet{
      .positive = {{"is", "bipartite"},
                   {"are", "bipartite"},
                   {"be", "bipartite"},
                   {"bipartite", "yes"},
                   {"bipartite", "true"}},
      .negative = {{"not", "bipartite"},
                   {"not", "be", "bipartite"},
                   {"bipartite", "no"},
                   {"bipartite", "false"}}};
  static const auto* const kNone = new PhraseSet{};
  switch (task) {
    case TaskKind::kCycleCheck: return *kCycle;
    case TaskKind::kBipartiteCheck: return *kBipartite;
    default: return *kNone;
  }
}

// Last task phrase in `text`, skipping phrases inside a question or one
// introduced by "whether"/"if"/"check"/"determine".
std::optional<bool> LastPhrase(TaskKind task, std::string_view text) {
  const std::vector<WordToken> words = Words(text);
  const PhraseSet& phrases = PhrasesFor(task);
  struct Match {
    size_t start;
    size_t end;  // exclusive token index
    bool polarity;
  };
  std::vector<Match> matches;
  auto scan = [&](const std::vector<Phrase>& set, bool polarity) {
    for (const Phrase& phrase : set) {
      for (size_t i = 0; i + phrase.size() <= words.size(); ++i) {
        bool hit = true;
        for (size_t k = 0; k < phrase.size() && hit; ++k) {
          hit = words[i + k].word == phrase[k];
        }
        if (hit) matches.push_back({i, i + phrase.size(), polarity});
      }
    }
  };
  scan(phrases.positive, true);
  scan(phrases.negative, false);

  auto contained = [&](const Match& m) {
    for (const Match& other : matches) {
      if (other.end - other.start > m.end - m.start && other.start <= m.start &&
          m.end <= other.end) {
        return true;
      }
    }
    return false;
  };
  auto hedged = [&](const Match& m) {
    for (size_t k = m.start >= 3 ? m.start - 3 : 0; k < m.start; ++k) {
      const std::string& w = words[k].word;
      if (w == "whether" || w == "if" || w == "check" || w == "determine" ||
          w == "checking" || w == "determining") {
        return true;
      }
    }
    const size_t stop = text.find_first_of(".?!\n", words[m.end - 1].end);
    return stop != std::string_view::npos && text[stop] == '?';
  };

  std::optional<Match> best;
  for (const Match& m : matches) {
    if (contained(m) || hedged(m)) continue;
    if (!best || m.start > best->start ||
        (m.start == best->start && m.end > best->end)) {
      best = m;
    }
  }
  if (!best) return std::nullopt;
  return best->polarity;
}

absl::Status Failed(std::string_view why) {
  return absl::NotFoundError(std::string(why));
}

std::optional<int64_t> NumberWord(std::string_view word) {
  static constexpr std::array<std::string_view, 21> kWords = {
      "zero",    "one",     "two",       "three",    "four",
      "five",    "six",     "seven",     "eight",    "nine",
      "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
      "fifteen", "sixteen", "seventeen", "eighteen", "nineteen",
      "twenty"};
  for (size_t i = 0; i < kWords.size(); ++i) {
    if (kWords[i] == word) return static_cast<int64_t>(i);
  }
  return std::nullopt;
}

absl::StatusOr<Answer> ExtractInt(std::string_view text,
                                  const ExtractionContext& ctx) {
  if (auto start = LastSentinel(text)) {
    const std::string_view segment = SentinelSegment(text, *start);
    const std::string plain = StripAsides(segment);
    if (auto ints = Integers(plain); !ints.empty()) {
      return IntAnswer{ints.back().value};
    }
    // Words are scanned raw because the filler list swallows "one".
    std::optional<int64_t> spelled;
    size_t i = 0;
    while (i < plain.size()) {
      if (!IsAlpha(plain[i])) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < plain.size() && IsAlpha(plain[j])) ++j;
      if (auto v = NumberWord(Lower(plain.substr(i, j - i)))) spelled = v;
      i = j;
    }
    if (spelled) return IntAnswer{*spelled};
    if (auto ints = Integers(segment); !ints.empty()) {
      return IntAnswer{ints.back().value};
    }
  }
  if (auto ints = Integers(TrailingWindow(text, ctx.trailing_window));
      !ints.empty()) {
    return IntAnswer{ints.back().value};
  }
  if (auto ints = Integers(text); !ints.empty()) {
    return IntAnswer{ints.back().value};
  }
  return Failed("no integer in response");
}

absl::StatusOr<Answer> ExtractBool(TaskKind task, std::string_view text,
                                   const ExtractionContext& ctx) {
  if (auto start = LastSentinel(text)) {
    const std::string_view segment = SentinelSegment(text, *start);
    const std::vector<WordToken> words = Words(segment);
    if (!words.empty()) {
      if (auto v = YesNo(words.front().word)) return BoolAnswer{*v};
    }
    if (auto v = LastPhrase(task, segment)) return BoolAnswer{*v};
  }
  if (auto v = LastPhrase(task, text)) return BoolAnswer{*v};
  const std::vector<WordToken> words = Words(text);
  if (!words.empty()) {
    if (auto v = YesNo(words.front().word)) return BoolAnswer{*v};
  }
  const std::vector<WordToken> tail =
      Words(TrailingWindow(text, ctx.trailing_window));
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) {
    if (it->word == "yes") return BoolAnswer{true};
    if (it->word == "no") return BoolAnswer{false};
  }
  return Failed("no yes/no decision in response");
}

// Bracketed lists, innermost-bracket aware, in order of their closing
// bracket. Only [...] and {...} count.
std::vector<std::string_view> BracketLists(std::string_view text) {
  std::vector<std::string_view> out;
  std::vector<std::pair<char, size_t>> stack;
  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '[' || c == '{') {
      stack.push_back({c, i});
    } else if ((c == ']' || c == '}') && !stack.empty()) {
      const auto [open, at] = stack.back();
      stack.pop_back();
      if ((open == '[') == (c == ']')) {
        out.push_back(text.substr(at + 1, i - at - 1));
      }
    }
  }
  return out;
}

bool OnlyIntegerList(std::string_view s) {
  for (char c : s) {
    if (!IsDigit(c) && c != ',' && c != ';' && c != ' ' && c != '\t' &&
        c != '\n' && c != '\r') {
      return false;
    }
  }
  return true;
}

NodeSetAnswer NodeSetFrom(const std::vector<IntToken>& ints) {
  std::vector<Node> nodes;
  for (const IntToken& t : ints) {
    if (t.value <= INT32_MAX) nodes.push_back(static_cast<Node>(t.value));
  }
  return MakeNodeSet(std::move(nodes));
}

absl::StatusOr<Answer> ExtractNodeSet(std::string_view text,
                                      const ExtractionContext& ctx) {
  if (auto start = LastSentinel(text)) {
    const std::string_view segment = SentinelSegment(text, *start);
    const auto lists = BracketLists(segment);
    if (!lists.empty()) return NodeSetFrom(Integers(lists.back()));
    if (auto ints = Integers(segment); !ints.empty()) return NodeSetFrom(ints);
    for (const WordToken& w : Words(segment)) {
      if (w.word == "none" || w.word == "empty" || w.word == "no") {
        return NodeSetAnswer{};
      }
    }
  }
  for (std::string_view window :
       {TrailingWindow(text, ctx.trailing_window), text}) {
    const auto lists = BracketLists(window);
    for (auto it = lists.rbegin(); it != lists.rend(); ++it) {
      if (OnlyIntegerList(*it)) return NodeSetFrom(Integers(*it));
    }
  }
  return Failed("no node list in response");
}

// "(u, v)", "(u,v)", "(u - v)" and "(u v)" pairs in order.
std::vector<Edge> Pairs(std::string_view s) {
  std::vector<Edge> out;
  size_t i = 0;
  auto skip = [&](size_t k) {
    while (k < s.size() && (s[k] == ' ' || s[k] == '\t')) ++k;
    return k;
  };
  auto number = [&](size_t k, int64_t* value) -> size_t {
    size_t j = k;
    while (j < s.size() && IsDigit(s[j])) ++j;
    if (j == k) return std::string_view::npos;
    auto [ptr, ec] = std::from_chars(s.data() + k, s.data() + j, *value);
    if (ec != std::errc() || *value > INT32_MAX) return std::string_view::npos;
    return j;
  };
  while ((i = s.find('(', i)) != std::string_view::npos) {
    size_t k = skip(i + 1);
    int64_t a = 0;
    int64_t b = 0;
    size_t after_a = number(k, &a);
    if (after_a == std::string_view::npos) {
      ++i;
      continue;
    }
    k = skip(after_a);
    if (k < s.size() && (s[k] == ',' || s[k] == '-' || s[k] == ';')) {
      k = skip(k + 1);
    }
    size_t after_b = number(k, &b);
    if (after_b == std::string_view::npos) {
      ++i;
      continue;
    }
    k = skip(after_b);
    if (k < s.size() && s[k] == ')') {
      out.push_back({static_cast<Node>(a), static_cast<Node>(b)});
      i = k + 1;
    } else {
      ++i;
    }
  }
  return out;
}

bool OnlyPairList(std::string_view s) {
  for (char c : s) {
    if (!IsDigit(c) && c != ',' && c != ';' && c != ' ' && c != '\t' &&
        c != '\n' && c != '\r' && c != '(' && c != ')' && c != '-') {
      return false;
    }
  }
  return true;
}

absl::StatusOr<Answer> ExtractEdgeSet(std::string_view text,
                                      const ExtractionContext& ctx) {
  if (auto start = LastSentinel(text)) {
    const std::string_view rest = text.substr(*start);
    if (auto pairs = Pairs(rest); !pairs.empty()) {
      return EdgeSetAnswer{std::move(pairs)};
    }
    const std::string_view segment = SentinelSegment(text, *start);
    const auto lists = BracketLists(segment);
    if (!lists.empty() && lists.back().find_first_not_of(" \t") ==
                              std::string_view::npos) {
      return EdgeSetAnswer{};
    }
  }
  for (std::string_view window :
       {TrailingWindow(text, ctx.trailing_window), text}) {
    const auto lists = BracketLists(window);
    for (auto it = lists.rbegin(); it != lists.rend(); ++it) {
      if (!OnlyPairList(*it)) continue;
      if (auto pairs = Pairs(*it); !pairs.empty()) {
        return EdgeSetAnswer{std::move(pairs)};
      }
    }
  }
  return Failed("no edge list in response");
}

bool IsRunGap(std::string_view gap) {
  if (gap.empty()) return false;
  for (unsigned char c : gap) {
    // 0xE2 0x86 0x92 is U+2192 RIGHTWARDS ARROW in UTF-8.
    if (c != ' ' && c != '\t' && c != ',' && c != ';' && c != '-' &&
        c != '>' && c != 0xE2 && c != 0x86 && c != 0x92) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<Node>> Runs(std::string_view s) {
  std::vector<std::vector<Node>> runs;
  const std::vector<IntToken> ints = Integers(s);
  for (size_t i = 0; i < ints.size(); ++i) {
    if (ints[i].value > INT32_MAX) continue;
    const Node value = static_cast<Node>(ints[i].value);
    if (i > 0 && !runs.empty() &&
        IsRunGap(s.substr(ints[i - 1].end, ints[i].begin - ints[i - 1].end))) {
      runs.back().push_back(value);
    } else {
      runs.push_back({value});
    }
  }
  return runs;
}

bool Covers(const std::vector<Node>& run, const ExtractionContext& ctx) {
  if (ctx.node_count <= 0) return run.size() >= 2;
  const std::set<Node> present(run.begin(), run.end());
  for (int i = 0; i < ctx.node_count; ++i) {
    if (!present.contains(ctx.label_base + i)) return false;
  }
  return true;
}

absl::StatusOr<Answer> ExtractNodeSeq(std::string_view text,
                                      const ExtractionContext& ctx) {
  std::optional<std::vector<Node>> sentinel_run;
  if (auto start = LastSentinel(text)) {
    const auto runs = Runs(SentinelSegment(text, *start));
    for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
      if (Covers(*it, ctx)) return NodeSeqAnswer{*it};
    }
    if (!runs.empty()) {
      sentinel_run = *std::max_element(
          runs.begin(), runs.end(),
          [](const auto& a, const auto& b) { return a.size() < b.size(); });
    }
  }
  const auto runs = Runs(text);
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    if (Covers(*it, ctx)) return NodeSeqAnswer{*it};
  }
  if (sentinel_run) return NodeSeqAnswer{*std::move(sentinel_run)};
  return Failed("no node ordering in response");
}

}  // namespace

AnswerShape ExpectedShape(TaskKind task, MstMode mst_mode) {
  if (task == TaskKind::kMinimumSpanningTree && mst_mode == MstMode::kCount) {
    return AnswerShape::kInt;
  }
  return ShapeOf(task);
}

absl::StatusOr<Answer> ExtractAnswer(TaskKind task, std::string_view response,
                                     const ExtractionContext& context) {
  switch (ExpectedShape(task, context.mst_mode)) {
    case AnswerShape::kInt: return ExtractInt(response, context);
    case AnswerShape::kBool: return ExtractBool(task, response, context);
    case AnswerShape::kNodeSet: return ExtractNodeSet(response, context);
    case AnswerShape::kEdgeSet: return ExtractEdgeSet(response, context);
    case AnswerShape::kNodeSeq: return ExtractNodeSeq(response, context);
  }
  return Failed("unknown answer shape");
}

}  // namespace graphbench
