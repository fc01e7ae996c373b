#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace dnflogic;
using dnflogic::testing::xor_table;

namespace {
bool has_error(const ValidationReport& r) { return !r.ok(); }
bool has_warning(const ValidationReport& r) {
    for (const auto& v : r.violations) {
        if (v.severity == Violation::Severity::warning) return true;
    }
    return false;
}
}  // namespace

TEST(Validate, XorIsClean) { EXPECT_TRUE(validate(xor_table()).empty()); }

TEST(Validate, ArityMismatch) {
    auto t = xor_table();
    t.rows[1].cells.push_back(LogicValue::continuous(1.0));
    auto r = validate(t);
    EXPECT_TRUE(has_error(r));
    EXPECT_NE(r.to_string().find("3 cells for 2 inputs"), std::string::npos);
}

TEST(Validate, DuplicateBooleanRowsWarn) {
    auto t = xor_table();
    t.rows.push_back(t.rows[1]);
    auto r = validate(t);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(has_warning(r));
}

TEST(Validate, EmptyTables) {
    LogicTable t;
    t.name = "empty";
    auto r = validate(t);
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(r.violations.size(), 2u);
}

TEST(Validate, KindMismatch) {
    LogicTable t;
    t.name = "k";
    t.inputs = {{"mode", ValueKind::state}, {"x", ValueKind::continuous}};
    t.rows.push_back({{LogicValue::continuous(0.5), LogicValue::state(2)}, LogicValue::continuous(1.0)});
    auto r = validate(t);
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(r.violations.size(), 2u);
}

TEST(Validate, UnknownCellsAllowedButNotUnknownOutputs) {
    LogicTable t;
    t.name = "u";
    t.inputs = {{"a", ValueKind::continuous}};
    t.rows.push_back({{LogicValue::unknown()}, LogicValue::continuous(0.8)});
    EXPECT_TRUE(validate(t).empty());
    t.rows.push_back({{LogicValue::continuous(1.0)}, LogicValue::unknown()});
    EXPECT_FALSE(validate(t).ok());
}

TEST(Validate, MixedOutputsRejected) {
    LogicTable t;
    t.name = "mixed";
    t.inputs = {{"s5", ValueKind::continuous}};
    t.rows.push_back({{LogicValue::continuous(1.0)}, ExternalBinding{"w6.x"}});
    t.rows.push_back({{LogicValue::continuous(0.0)}, LogicValue::continuous(0.5)});
    EXPECT_FALSE(validate(t).ok());

    t.rows[1].output = LogicValue::state(3);
    EXPECT_FALSE(validate(t).ok());

    t.rows[0].output = LogicValue::continuous(1.0);
    EXPECT_FALSE(validate(t).ok()) << "state and continuous outputs together";
}

TEST(Validate, RepeatedInputName) {
    auto t = xor_table();
    t.inputs[1].name = "X";
    EXPECT_FALSE(validate(t).ok());
}

TEST(LogicTable, Classification) {
    auto t = xor_table();
    EXPECT_TRUE(t.is_boolean());
    EXPECT_FALSE(t.is_interpolation());
    t.rows[0].output = LogicValue::continuous(0.5);
    EXPECT_FALSE(t.is_boolean());
    t.rows[0].output = ExternalBinding{"w5.x"};
    EXPECT_TRUE(t.is_interpolation());
}
