#include "cthopf/report.hpp"

#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cthopf {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Warn: return "warn";
        case CheckStatus::Info: return "info";
    }
    return "?";
}

void Report::pass(std::string axiom, std::string location, std::size_t checked) {
    add({std::move(axiom), std::move(location), CheckStatus::Pass, checked, "", "", ""});
}

void Report::fail(std::string axiom, std::string location, std::size_t checked, std::string witness,
                  std::string lhs, std::string rhs) {
    add({std::move(axiom), std::move(location), CheckStatus::Fail, checked, std::move(witness), std::move(lhs),
         std::move(rhs)});
}

void Report::info(std::string axiom, std::string location, std::string witness) {
    add({std::move(axiom), std::move(location), CheckStatus::Info, 0, std::move(witness), "", ""});
}

void Report::warn(std::string axiom, std::string location, std::string witness) {
    add({std::move(axiom), std::move(location), CheckStatus::Warn, 0, std::move(witness), "", ""});
}

void Report::merge(const Report& other) {
    for (const auto& n : other.notes_) notes_.push_back(n);
    for (const auto& e : other.entries_) entries_.push_back(e);
}

bool Report::passed() const {
    for (const auto& e : entries_)
        if (e.status == CheckStatus::Fail) return false;
    return true;
}

std::size_t Report::fail_count() const {
    std::size_t n = 0;
    for (const auto& e : entries_)
        if (e.status == CheckStatus::Fail) ++n;
    return n;
}

void Report::write_human(std::ostream& os) const {
    if (!title_.empty()) os << "== " << title_ << " ==\n";
    for (const auto& n : notes_) os << "# " << n << "\n";
    for (const auto& e : entries_) {
        os << "[" << status_name(e.status) << "] " << e.axiom;
        if (!e.location.empty()) os << " @ " << e.location;
        if (e.checked) os << " (" << e.checked << " checks)";
        if (!e.witness.empty()) os << " : " << e.witness;
        if (!e.lhs.empty() || !e.rhs.empty()) os << " lhs=" << e.lhs << " rhs=" << e.rhs;
        os << "\n";
    }
}

void Report::write_jsonl(std::ostream& os) const {
    using json = nlohmann::ordered_json;
    if (!title_.empty() || !notes_.empty()) {
        json h;
        h["report"] = title_;
        if (!notes_.empty()) h["notes"] = notes_;
        os << h.dump() << "\n";
    }
    for (const auto& e : entries_) {
        json j;
        j["axiom"] = e.axiom;
        j["location"] = e.location;
        j["status"] = status_name(e.status);
        j["checked"] = e.checked;
        if (!e.witness.empty()) j["witness"] = e.witness;
        if (!e.lhs.empty()) j["lhs"] = e.lhs;
        if (!e.rhs.empty()) j["rhs"] = e.rhs;
        os << j.dump() << "\n";
    }
}

std::string Report::jsonl() const {
    std::ostringstream os;
    write_jsonl(os);
    return os.str();
}

}  // namespace cthopf
