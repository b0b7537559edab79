#!/usr/bin/env python3
"""Regenerates data/demo_store.json.

30 current students, 12 open postings in three families (web, data, infrastructure),
8 past placements on 6 past missions done by 8 alumni. Mission texts are left
un-annotated so the pipeline starts from free text.
"""

import json
import random
import sys
from pathlib import Path


def concept(cid, label, category, *synonyms):
    return {"id": cid, "label": label, "category": category, "synonyms": list(synonyms)}


LEXICON = {
    "version": "demo-1",
    "entries": [
        concept("act.develop", "develop", "Action", "developing", "build", "implement"),
        concept("act.design", "design", "Action", "designing"),
        concept("act.analyze", "analyze", "Action", "analyse", "analyzing", "study"),
        concept("act.model", "model", "Action", "modelling", "modeling", "predict"),
        concept("act.deploy", "deploy", "Action", "deploying", "install"),
        concept("act.audit", "audit", "Action", "auditing", "assess"),
        concept("act.maintain", "maintain", "Action", "maintaining", "monitor", "administer"),
        concept("dom.webapp", "web application", "DomainAction", "website", "web platform"),
        concept("dom.mobileapp", "mobile app", "DomainAction", "mobile application"),
        concept("dom.api", "rest api", "DomainAction", "api", "web service"),
        concept("dom.dashboard", "dashboard", "DomainAction", "dashboards", "reporting tool"),
        concept("dom.datapipe", "data pipeline", "DomainAction", "etl pipeline", "etl"),
        concept("dom.mlmodel", "machine learning model", "DomainAction", "forecasting model",
                "predictive model"),
        concept("dom.network", "network", "DomainAction", "network infrastructure"),
        concept("dom.secpolicy", "security policy", "DomainAction", "security policies",
                "access control"),
        concept("dom.server", "server", "DomainAction", "servers", "cloud infrastructure"),
        concept("area.retail", "retail", "ActivityArea", "e-commerce", "ecommerce"),
        concept("area.banking", "banking", "ActivityArea", "finance", "insurance"),
        concept("area.telecom", "telecom", "ActivityArea", "telecommunications"),
        concept("area.energy", "energy", "ActivityArea", "utilities"),
        concept("skill.python", "python", "SkillKeyword"),
        concept("skill.java", "java", "SkillKeyword"),
        concept("skill.javascript", "javascript", "SkillKeyword", "js"),
        concept("skill.react", "react", "SkillKeyword"),
        concept("skill.sql", "sql", "SkillKeyword"),
        concept("skill.spark", "spark", "SkillKeyword"),
        concept("skill.linux", "linux", "SkillKeyword"),
        concept("skill.docker", "docker", "SkillKeyword"),
    ],
}

COMPANIES = [
    ("co.shopnow", "ShopNow", "large", 1200),
    ("co.webfactory", "WebFactory", "small", 40),
    ("co.bankia", "Bankia Finance", "large", 5400),
    ("co.insurly", "Insurly", "medium", 320),
    ("co.telco", "TelcoNet", "large", 8000),
    ("co.enerlux", "Enerlux", "medium", 900),
]

# id, company, location, capacity, text
OPEN_MISSIONS = [
    ("m.web.1", "co.shopnow", "Paris", 3,
     "Develop a responsive web application with React and JavaScript. "
     "You will also design the mobile app checkout."),
    ("m.web.2", "co.webfactory", "Lyon", 3,
     "Join the team to develop the web platform of a start-up and design its mobile application "
     "in JavaScript and React."),
    ("m.web.3", "co.shopnow", "Paris", 3,
     "Design the mobile application of our loyalty programme and develop the website "
     "back office with React and JavaScript."),
    ("m.web.4", "co.webfactory", "Lyon", 2,
     "Develop the customer website and design the companion mobile app using React and "
     "JavaScript."),
    ("m.data.1", "co.bankia", "Paris", 3,
     "Analyze customer transactions through a dashboard, then model "
     "credit risk with a predictive model. Python and SQL required."),
    ("m.data.2", "co.insurly", "Toulouse", 3,
     "Model claims with a predictive model and analyze the resulting dashboards with "
     "Python and SQL."),
    ("m.data.3", "co.bankia", "Paris", 3,
     "Analyze the dashboards used by traders and model prices with a predictive model "
     "in Python and SQL."),
    ("m.data.4", "co.insurly", "Toulouse", 2,
     "Analyze churn on a dashboard for the portfolio, then model it with a predictive "
     "model using Python and SQL."),
    ("m.infra.1", "co.telco", "Lyon", 3,
     "Deploy servers and maintain the network infrastructure of an operator on Linux with Docker."),
    ("m.infra.2", "co.enerlux", "Toulouse", 3,
     "Maintain the network of our grid sites and deploy servers with Docker on Linux."),
    ("m.infra.3", "co.telco", "Lyon", 3,
     "Maintain the network of an operator and deploy the servers hosting its services "
     "with Linux and Docker."),
    ("m.infra.4", "co.enerlux", "Toulouse", 2,
     "Deploy servers across our sites and maintain the network that links them, using Linux "
     "and Docker."),
]

PAST_MISSIONS = [
    ("p.web.1", "co.shopnow", "Paris",
     "Develop the web application and design the mobile app prototype with React and JavaScript."),
    ("p.web.2", "co.webfactory", "Lyon",
     "Develop a website and design its mobile application in JavaScript and React."),
    ("p.data.1", "co.bankia", "Paris",
     "Analyze data in dashboards and model trends with a predictive model in Python and SQL."),
    ("p.data.2", "co.insurly", "Toulouse",
     "Model pricing with a predictive model and analyze its dashboard with Python and SQL."),
    ("p.infra.1", "co.telco", "Lyon",
     "Deploy servers and maintain the network on Linux with Docker."),
    ("p.infra.2", "co.enerlux", "Toulouse",
     "Maintain the network of the grid and deploy servers using Docker and Linux."),
]

# past mission, alumnus, outcome, year
PAST_PLACEMENTS = [
    ("p.web.1", "a01", "Success", 2022),
    ("p.web.2", "a02", "Success", 2023),
    ("p.web.2", "a03", "Difficulty", 2023),
    ("p.data.1", "a04", "Success", 2022),
    ("p.data.2", "a05", "Success", 2023),
    ("p.infra.1", "a06", "Success", 2022),
    ("p.infra.2", "a07", "Success", 2023),
    ("p.infra.2", "a08", "Difficulty", 2022),
]

# id, label, keywords, coefficient, family
COURSES = [
    ("c.webdev", "Web development", ["act.develop", "dom.webapp"], 3, "web"),
    ("c.mobile", "Mobile interface design", ["act.design", "dom.mobileapp"], 2, "web"),
    ("c.api", "Service-oriented programming", ["act.develop", "dom.api"], 2, "web"),
    ("c.js", "JavaScript frameworks", ["skill.javascript", "skill.react"], 1, "web"),
    ("c.analytics", "Business analytics", ["act.analyze", "dom.dashboard"], 3, "data"),
    ("c.ml", "Machine learning", ["act.model", "dom.mlmodel"], 3, "data"),
    ("c.dataeng", "Data engineering", ["dom.datapipe", "act.develop"], 2, "data"),
    ("c.sql", "Databases", ["skill.sql"], 1, "data"),
    ("c.netadmin", "Network administration", ["act.maintain", "dom.network"], 3, "infra"),
    ("c.security", "Information security", ["act.audit", "dom.secpolicy"], 3, "infra"),
    ("c.cloud", "Cloud operations", ["act.deploy", "dom.server"], 2, "infra"),
    ("c.linux", "Unix systems", ["skill.linux", "skill.docker"], 1, "infra"),
]

FAMILY_AREAS = {
    "web": ["area.retail", "skill.javascript", "skill.react"],
    "data": ["area.banking", "skill.python", "skill.sql"],
    "infra": ["area.telecom", "area.energy", "skill.linux"],
}
FAMILY_COMPANIES = {
    "web": ["co.shopnow", "co.webfactory"],
    "data": ["co.bankia", "co.insurly"],
    "infra": ["co.telco", "co.enerlux"],
}
CITIES = ["Paris", "Lyon", "Toulouse"]
FIRST = ["Alice", "Bruno", "Chloé", "David", "Emma", "Farid", "Gaëlle", "Hugo", "Inès", "Jules",
         "Karim", "Léa", "Marc", "Nora", "Olivier", "Pauline", "Quentin", "Rania", "Samuel",
         "Théo", "Ugo", "Valérie", "William", "Yasmine", "Zoé", "Adrien", "Bérénice", "Cédric",
         "Diane", "Éloïse", "Fabien", "Giulia", "Hélène", "Ilan", "Jade", "Kevin", "Lina",
         "Maël"]
LAST = ["Martin", "Bernard", "Dubois", "Thomas", "Robert", "Richard", "Petit", "Durand",
        "Leroy", "Moreau", "Simon", "Laurent", "Lefèvre", "Michel", "Garcia", "David",
        "Bertrand", "Roux", "Vincent", "Fournier"]


def mission(mid, company, location, capacity, text, history):
    return {
        "id": mid,
        "companyId": company,
        "location": location,
        "competencies": [],
        "activityAreas": [],
        "experienceRequired": {"description": "", "months": 0},
        "project": "",
        "tasks": [{"label": "internship", "startDate": "2025-02-03", "endDate": "2025-07-25"}],
        "durationWeeks": 24,
        "history": history,
        "minStudentsProposed": 1,
        "maxStudentsProposed": 3,
        "capacity": capacity,
        "rawText": text,
    }


def student(rng, idx, sid, family, year):
    first = FIRST[idx % len(FIRST)]
    last = LAST[(idx * 7) % len(LAST)]
    keywords = rng.sample(FAMILY_AREAS[family], 2)
    return {
        "id": sid,
        "administrative": {
            "firstName": first,
            "lastName": last,
            "phone": "+33 6 00 00 %02d %02d" % (idx // 100, idx % 100),
            "address": "%d rue de l'Université, %s" % (idx + 1, rng.choice(CITIES)),
            "email": "%s@students.example.edu" % sid,
            "nationality": "FR",
            "age": rng.randint(21, 26),
        },
        "academic": {"degree": "MSc Software Engineering", "academicYear": year,
                     "trainingId": "tr.msc-se"},
        "status": rng.choice(["InitialTraining", "InitialTraining", "ContinuousTraining", "VAE"]),
        "evaluationRecord": {
            "oralPresentation": rng.randint(9, 18),
            "qualityOfWork": rng.randint(9, 18),
            "behavior": rng.randint(11, 19),
        },
        "candidateRecord": {
            "experienceQuality": rng.randint(6, 18),
            "projectManagementKnowledge": rng.randint(6, 18),
            "cvOverallRating": rng.randint(8, 18),
            "autonomy": rng.randint(8, 19),
        },
        "interests": {
            "missionKeywords": keywords,
            "preferredLocations": [rng.choice(CITIES)],
            "minSalary": 600,
            "preferredCompanies": [rng.choice(FAMILY_COMPANIES[family])],
        },
    }


def marks_for(rng, sid, family):
    out = []
    for cid, _, _, _, cfam in COURSES:
        if cfam == family:
            value = rng.uniform(13, 19.5)
        else:
            value = rng.uniform(5, 12)
        out.append({"studentId": sid, "courseId": cid, "value": round(value * 2) / 2})
    return out


def build():
    rng = random.Random(20240611)
    families = ["web", "data", "infra"]
    history = {
        "co.shopnow": (4, 6, 0),
        "co.webfactory": (2, 3, 1),
        "co.bankia": (6, 10, 1),
        "co.insurly": (1, 2, 1),
        "co.telco": (8, 12, 2),
        "co.enerlux": (3, 4, 0),
    }

    def hist(company):
        years, total, diff = history[company]
        return {"yearsPartnership": years, "totalMissions": total, "missionsWithDifficulties": diff}

    missions = [mission(mid, co, loc, cap, text, hist(co)) for mid, co, loc, cap, text in OPEN_MISSIONS]
    missions += [mission(mid, co, loc, 1, text, hist(co)) for mid, co, loc, text in PAST_MISSIONS]

    students, marks = [], []
    for i in range(30):
        sid = "s%02d" % (i + 1)
        fam = families[i % 3]
        students.append(student(rng, i, sid, fam, "2024-2025"))
        marks += marks_for(rng, sid, fam)
    alumni_family = {"a01": "web", "a02": "web", "a03": "web", "a04": "data", "a05": "data",
                     "a06": "infra", "a07": "infra", "a08": "infra"}
    for j, (aid, fam) in enumerate(sorted(alumni_family.items())):
        students.append(student(rng, 30 + j, aid, fam, "2021-2022"))
        marks += marks_for(rng, aid, fam)

    modules = {}
    for cid, label, keywords, coef, fam in COURSES:
        modules.setdefault(fam, []).append({
            "id": cid, "label": label, "keywords": keywords, "hours": 40, "ects": 4,
            "coefficient": coef, "teacherId": "t." + fam,
        })
    units = [{
        "id": "tu." + fam,
        "label": fam.capitalize() + " track",
        "objectives": "",
        "keywords": [],
        "modules": [{"id": "mod." + fam, "label": fam.capitalize() + " core", "hours": 160,
                     "ects": 16, "coefficient": 1, "courses": courses}],
    } for fam, courses in modules.items()]

    university = {
        "name": "Demo University",
        "departments": [{"id": "dep.cs", "label": "Computer Science",
                         "trainings": [{"id": "tr.msc-se", "label": "MSc Software Engineering",
                                        "teachingUnits": units}]}],
        "teachers": [{"id": "t.web", "name": "Dr. Web"}, {"id": "t.data", "name": "Dr. Data"},
                     {"id": "t.infra", "name": "Dr. Infra"}],
        "partnerships": [{"departmentId": "dep.cs", "companyId": co[0], "sinceYear": 2015 + i}
                         for i, co in enumerate(COMPANIES)],
    }

    return {
        "lexicon": LEXICON,
        "companies": [{"id": i, "name": n, "importance": imp, "employeeCount": e}
                      for i, n, imp, e in COMPANIES],
        "missions": missions,
        "students": students,
        "university": university,
        "marks": marks,
        "pastPlacements": [{"missionId": m, "studentId": s, "outcome": o, "year": y}
                           for m, s, o, y in PAST_PLACEMENTS],
        "constraints": [{"companyId": "co.bankia", "minProposed": 1, "maxProposed": 2}],
    }


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "demo_store.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(build(), indent=2, sort_keys=True, ensure_ascii=False) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
