#pragma once

#include <sstream>
#include <string>

namespace lcskit {

// Flat `key = value` report with optional section headers; byte-identical
// across runs for identical inputs.
class Report {
public:
    void section(const std::string& name) { out_ << "[" << name << "]\n"; }
    template <class T>
    void add(const std::string& key, const T& value) {
        out_ << key << " = " << value << "\n";
    }
    void raw(const std::string& text) { out_ << text; }
    std::string str() const { return out_.str(); }

private:
    std::ostringstream out_;
};

}  // namespace lcskit
