#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace cthopf {

enum class CheckStatus { Pass, Fail, Warn, Info };

const char* status_name(CheckStatus s);

struct CheckEntry {
    std::string axiom;     // stable identifier, e.g. "hopf.antipode"
    std::string location;  // fixture / component-pair description
    CheckStatus status = CheckStatus::Pass;
    std::size_t checked = 0;  // number of basis/label tuples swept
    std::string witness;      // first violating tuple, empty when passing
    std::string lhs, rhs;     // coordinates of the two sides at the witness
};

/// Ordered list of per-axiom results. Serialization is deterministic:
/// entries appear in insertion order, notes first.
class Report {
  public:
    explicit Report(std::string title = "") : title_(std::move(title)) {}

    void note(std::string text) { notes_.push_back(std::move(text)); }
    void add(CheckEntry e) { entries_.push_back(std::move(e)); }
    void pass(std::string axiom, std::string location, std::size_t checked);
    void fail(std::string axiom, std::string location, std::size_t checked, std::string witness,
              std::string lhs = "", std::string rhs = "");
    void info(std::string axiom, std::string location, std::string witness);
    void warn(std::string axiom, std::string location, std::string witness);
    void merge(const Report& other);

    bool passed() const;
    std::size_t fail_count() const;
    const std::vector<CheckEntry>& entries() const { return entries_; }
    const std::vector<std::string>& notes() const { return notes_; }
    const std::string& title() const { return title_; }

    /// One human line per entry, notes as a header.
    void write_human(std::ostream& os) const;
    /// JSON lines {axiom, location, status, checked, witness?, lhs?, rhs?}.
    void write_jsonl(std::ostream& os) const;
    std::string jsonl() const;

  private:
    std::string title_;
    std::vector<std::string> notes_;
    std::vector<CheckEntry> entries_;
};

}  // namespace cthopf
