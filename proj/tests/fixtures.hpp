#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "linksub/pd.hpp"

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(LINKSUB_FIXTURE_DIR) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline linksub::LinkDiagram fixture_diagram(const std::string& name) {
    return linksub::parse_pd_code(read_fixture(name));
}
